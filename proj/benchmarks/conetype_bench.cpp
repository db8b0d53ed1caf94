// Copyright 2026 The conetype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "conetype/ball.hpp"
#include "conetype/cone_matrix.hpp"
#include "conetype/cone_oracle.hpp"
#include "conetype/cone_types.hpp"
#include "conetype/matrix_system.hpp"
#include "conetype/mult_functions.hpp"

namespace {

using namespace conetype;

const SurfaceGroup& group() {
  static const SurfaceGroup g(Genus(2));
  return g;
}

const ConeTypeTable& table() {
  static const ConeTypeTable t(group());
  return t;
}

std::vector<Word> random_words(int len, int count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, 7);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(Generator(static_cast<std::uint8_t>(d(rng))));
    out.push_back(w);
  }
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  auto words = random_words(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(group().normal_form(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(32)->Arg(128);

void BM_BallBuild(benchmark::State& state) {
  for (auto _ : state) {
    Ball b = Ball::build(group(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BallBuild)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  std::vector<GroupElement> xs;
  for (const Word& w : random_words(static_cast<int>(state.range(0)), 256)) {
    xs.push_back(group().normal_form(w));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(table().classify(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(64);

void BM_Fingerprint(benchmark::State& state) {
  static const ConeOracle oracle(group(), 4);
  std::vector<GroupElement> xs;
  for (const Word& w : random_words(7, 64)) xs.push_back(group().normal_form(w));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle.fingerprint(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Fingerprint)->Unit(benchmark::kMicrosecond);

void BM_Perron(benchmark::State& state) {
  ConeMatrix m = build_matrix(table());
  for (auto _ : state) benchmark::DoNotOptimize(perron(m).r);
}
BENCHMARK(BM_Perron)->Unit(benchmark::kMillisecond);

void BM_Growth(benchmark::State& state) {
  ConeMatrix m = build_matrix(table());
  for (auto _ : state) benchmark::DoNotOptimize(growth_counts(table(), m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Growth)->Arg(20)->Arg(100)->Unit(benchmark::kMicrosecond);

template <class T, Vector<T> (*Eval)(const MultFunc<T>&, const MatrixSystem<T>&, const GroupElement&)>
void BM_Evaluate(benchmark::State& state) {
  RationalSystem rs = random_system(table(), DimsProfile{{2, 1, 1, 3}}, 7);
  MatrixSystem<T> sys = rs.convert<T>();
  const GroupElement y = group().element("b");
  MultFunc<T> f(table(), group().identity(), y, Vector<T>(2, T(1)));
  // Repeated letters keep the prefix geodesic and inside the cone of b.
  const Word path = group().parse("baaddccbbaaddcc");
  GroupElement z = group().normal_form(path.subword(0, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Eval(f, sys, z));
}
BENCHMARK(BM_Evaluate<mpq_class, eval_recursive<mpq_class>>)->Name("BM_RecursiveExact")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Evaluate<mpq_class, eval_geodesic_sum<mpq_class>>)->Name("BM_GeodesicSumExact")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Evaluate<mpq_class, eval_matrix_form<mpq_class>>)->Name("BM_MatrixFormExact")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Evaluate<double, eval_geodesic_sum<double>>)->Name("BM_GeodesicSumFloat")->Arg(4)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
