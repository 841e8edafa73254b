#include <benchmark/benchmark.h>

#include "evoclass/classify.hpp"
#include "evoclass/text.hpp"

using namespace evoclass;

namespace {

evo::EvolutionAlgebra parse(const gf::Field& f, const char* lit) {
  return text::parse_algebra_literal(f, 2, lit);
}

void BM_FieldMul(benchmark::State& state) {
  gf::Field f = gf::Field::make(7);
  std::uint16_t acc = 1;
  for (auto _ : state) {
    for (std::uint16_t a = 1; a < 7; ++a)
      for (std::uint16_t b = 1; b < 7; ++b) acc = f.mul(acc, f.mul(a, b));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul);

void BM_WitnessSearchNegative(benchmark::State& state) {
  gf::Field f7 = gf::Field::make(7);
  evo::EvolutionAlgebra a = parse(f7, "1,0;1,0");
  evo::EvolutionAlgebra b = parse(f7, "1,0;3,0");  // different square class: full scan
  for (auto _ : state) {
    auto w = search::find_witness(a, b, Relation::isomorphism);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessSearchNegative);

void BM_IsotopismIdealBasis(benchmark::State& state) {
  gf::Field f2 = gf::Field::make(2);
  auto ideal = ideals::isot_ideal(parse(f2, "1,0;0,1"), parse(f2, "1,0;0,1"));
  poly::MonomialOrder ord(poly::OrderTag::grevlex, ideal.ring.nvars());
  for (auto _ : state) {
    auto basis = poly::buchberger(ideal.generators, ord);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_IsotopismIdealBasis);

void BM_IsomorphismLabel(benchmark::State& state) {
  gf::Field f7 = gf::Field::make(7);
  evo::AlgebraEnumeration algebras(f7, 2);
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto label = classify::isomorphism_label_2d(algebras.at(i));
    benchmark::DoNotOptimize(label);
    i = (i + 1) % algebras.size();
  }
}
BENCHMARK(BM_IsomorphismLabel);

void BM_ClassifyQ5Bruteforce(benchmark::State& state) {
  gf::Field f5 = gf::Field::make(5);
  for (auto _ : state) {
    auto partition =
        classify::classify_all(f5, 2, Relation::isomorphism, classify::Method::bruteforce, 1);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(BM_ClassifyQ5Bruteforce)->Unit(benchmark::kMillisecond);

void BM_StrongNormalForm(benchmark::State& state) {
  gf::Field f5 = gf::Field::make(5);
  evo::AlgebraEnumeration algebras(f5, 2);
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto nf = classify::strong_isotopy_normal_form(algebras.at(i));
    benchmark::DoNotOptimize(nf);
    i = (i + 1) % algebras.size();
  }
}
BENCHMARK(BM_StrongNormalForm);

}  // namespace

BENCHMARK_MAIN();
