// Serial against parallel kernels on a few fixed workloads. Each row checks
// that both executions agree before reporting times.
#include <chrono>
#include <cstdio>
#include <functional>

#include "finloc/catalog.hpp"
#include "finloc/filters.hpp"
#include "finloc/kernels.hpp"
#include "finloc/sublocales.hpp"
#include "finloc/theorems.hpp"

using namespace finloc;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.4f %10.4f %7.2fx  %s\n", name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
  std::printf("workers: %d\n", worker_count());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");

  const Frame b16(powerset_lattice(4));
  const auto pred = [&](std::uint64_t m) { return is_filter(b16, ElementSet(m)); };
  std::vector<std::uint64_t> fs, fp;
  const double s1 = seconds([&] { fs = serial::filter_subsets(b16.size(), pred); }, 5);
  const double p1 = seconds([&] { fp = parallel::filter_subsets(b16.size(), pred); }, 5);
  row("filter_subsets (2^4)", s1, p1, fs == fp);

  const Frame c16(chain_lattice(16));
  SubsetTables ts, tp;
  const double s2 = seconds([&] { ts = subset_tables(c16, Execution::serial); }, 2);
  const double p2 = seconds([&] { tp = subset_tables(c16, Execution::parallel); }, 2);
  row("subset_tables (16-chain)", s2, p2, ts.exact == tp.exact && ts.strongly_exact == tp.strongly_exact);

  std::vector<ElementSet> ss, sp;
  const Frame c10(chain_lattice(10));
  const double s3 = seconds([&] { ss = sublocales_brute(c10, Execution::serial); }, 2);
  const double p3 = seconds([&] { sp = sublocales_brute(c10, Execution::parallel); }, 2);
  row("sublocales_brute (10-chain)", s3, p3, ss == sp);

  const auto frames = build_catalog(default_catalog_spec());
  const auto all = select_theorems("all");
  SuiteResult rs, rp;
  const double s4 = seconds([&] { rs = run_suite(frames, all, Execution::serial); }, 1);
  const double p4 = seconds([&] { rp = run_suite(frames, all, Execution::parallel); }, 1);
  bool same = rs.verdicts.size() == rp.verdicts.size();
  for (std::size_t i = 0; same && i < rs.verdicts.size(); ++i)
    same = rs.verdicts[i].to_json() == rp.verdicts[i].to_json();
  row("run_suite (default catalog)", s4, p4, same);
  return 0;
}
