// Copyright 2026 The plp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "plp/potential.hpp"
#include "plp/solver.hpp"
#include "plp/subspace.hpp"

namespace {

using namespace plp;

// Dense random LP with a known interior point, so the simplex always finishes
// on the feasible branch.
LinProgram random_program(std::size_t n, std::size_t m, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  LinProgram prog;
  prog.dim = n;
  for (std::size_t i = 0; i < m; ++i) {
    LinConstraint con{std::vector<Rat>(n), Rat(coeff(rng) - 10), Sense::kGE};
    for (auto& a : con.coeffs) a = coeff(rng);
    prog.constraints.push_back(std::move(con));
  }
  return prog;
}

void BM_ExactSimplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LinProgram prog = random_program(n, 2 * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lp_feasible(prog));
}
BENCHMARK(BM_ExactSimplex)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SubspaceElimination(benchmark::State& state) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-2, 2);
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<HalfAffineSubspace> spaces(4);
  for (auto& h : spaces) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (int a = c(rng); a != 0) h.strict.terms.emplace_back(j, Rat(a));
    }
    h.strict.constant = c(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(subspace_elimination_generic(spaces, dim));
}
BENCHMARK(BM_SubspaceElimination)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_AssemblePca(benchmark::State& state) {
  const auto table = TransitionTable::vertex_nand();
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_pca_plp(table, ell, Pattern("01")));
}
BENCHMARK(BM_AssemblePca)->Arg(2)->Arg(3);

void BM_PcaVertexSolve(benchmark::State& state) {
  const PlpInstance inst = assemble_pca_plp(TransitionTable::vertex_nand(), 3, Pattern("01"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_side(inst, Side::kPositive, {kDefaultAutomataDegreeCap, {}}));
  }
}
BENCHMARK(BM_PcaVertexSolve)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
