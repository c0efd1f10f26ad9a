// Parallel (component-split) rank against the serial reference elimination on
// bar differentials of zoo algebras.
#include <benchmark/benchmark.h>

#include "hh/hochschild.hpp"
#include "hh/linalg.hpp"
#include "hh/split_complex.hpp"
#include "hh/zoo.hpp"

#include <map>

using namespace hh;

namespace {

template <class K>
const SparseMatrix<K>& bar_matrix(const std::string& name, const FieldSpec& f, std::size_t n, bool trivial_ext) {
  static std::map<std::string, SparseMatrix<K>> cache;
  const std::string key = name + (trivial_ext ? "/TA/" : "/") + std::to_string(n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto a = zoo<K>(name, f);
    auto e = trivial_ext ? trivial_split(a).e : a;
    it = cache.emplace(key, hochschild_cochain(e, Bimodule<K>::regular(e), n).d(n)).first;
  }
  return it->second;
}

template <class K>
void BM_rank(benchmark::State& state, const char* name, FieldSpec f, std::size_t n, bool trivial_ext, bool parallel) {
  const auto& m = bar_matrix<K>(name, f, n, trivial_ext);
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? rank(m) : rank_reference(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_rank_fp(benchmark::State& s, const char* name, std::uint32_t p, std::size_t n, bool te, bool par) {
  BM_rank<Fp>(s, name, FieldSpec::prime_field(p), n, te, par);
}

void BM_rank_q(benchmark::State& s, const char* name, std::size_t n, bool te, bool par) {
  BM_rank<Rational>(s, name, FieldSpec::rationals(), n, te, par);
}

}  // namespace

BENCHMARK_CAPTURE(BM_rank_fp, taft3_d2_parallel, "taft:3", 7, 2, false, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank_fp, taft3_d2_serial, "taft:3", 7, 2, false, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank_fp, taft2_TA_d2_parallel, "taft:2", 5, 2, true, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank_fp, taft2_TA_d2_serial, "taft:2", 5, 2, true, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank_q, cyclic3_TA_d2_parallel, "cyclic:3", 2, true, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank_q, cyclic3_TA_d2_serial, "cyclic:3", 2, true, false)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
