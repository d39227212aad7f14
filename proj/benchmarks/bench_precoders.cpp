// mmsec: secure multi-cell massive MIMO precoding laboratory
// Copyright (C) 2026 The mmsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "mmsec/an_precoders.hpp"
#include "mmsec/asymptotics.hpp"
#include "mmsec/data_precoders.hpp"
#include "mmsec/montecarlo.hpp"
#include "mmsec/rng.hpp"

using namespace mmsec;

namespace
{
    cmat channel(int K, int N)
    {
        Rng rng(1);
        return rng.cn_matrix(K, N);
    }
}

static void BM_SzfConstruct(benchmark::State &state)
{
    const cmat H = channel(int(state.range(0)), 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(szf_precoder(H).F.data());
}
BENCHMARK(BM_SzfConstruct)->Arg(8)->Arg(32)->Arg(64);

static void BM_SrciConstruct(benchmark::State &state)
{
    const cmat H = channel(int(state.range(0)), 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(srci_precoder(H, 0.1).F.data());
}
BENCHMARK(BM_SrciConstruct)->Arg(8)->Arg(32)->Arg(64);

static void BM_CzfConstruct(benchmark::State &state)
{
    const int K = int(state.range(0));
    const cmat S = channel(2 * K, 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(czf_precoder(S, 0, K).F.data());
}
BENCHMARK(BM_CzfConstruct)->Arg(8)->Arg(32)->Arg(64);

static void BM_SnsConstruct(benchmark::State &state)
{
    const cmat H = channel(int(state.range(0)), 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(sns_precoder(H).U.data());
}
BENCHMARK(BM_SnsConstruct)->Arg(8)->Arg(32)->Arg(64);

// Horner application of the polynomial data precoder versus the dense product
static void BM_PolyDataHorner(benchmark::State &state)
{
    const int K = 32;
    const auto pre = poly_data_precoder(channel(K, 256), mse_poly_coefficients(MsePolyInputs{K / 256.0, 256, 0.25, 1, 0.1, 2, 0.5, 0.9}, int(state.range(0))).mu);
    Rng rng(2);
    const cvec s = rng.cn_matrix(K, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_data_precoder(pre, s).data());
}
BENCHMARK(BM_PolyDataHorner)->DenseRange(1, 5, 2);

static void BM_PolyDataDense(benchmark::State &state)
{
    const int K = 32;
    const auto pre = poly_data_precoder(channel(K, 256), {1.0, -0.2, 0.05});
    Rng rng(2);
    const cvec s = rng.cn_matrix(K, 1);
    for (auto _ : state)
    {
        cvec y = pre.F * s;
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_PolyDataDense);

static void BM_PolyAnHorner(benchmark::State &state)
{
    const int K = 32;
    const auto pre = poly_an_precoder(channel(K, 256), an_poly_coefficients(K / 256.0, int(state.range(0))).nu);
    Rng rng(3);
    const cvec z = rng.cn_matrix(256, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_an_precoder(pre, z).data());
}
BENCHMARK(BM_PolyAnHorner)->DenseRange(1, 5, 2);

static void BM_SecrecyRealizations(benchmark::State &state)
{
    const auto cfg = make_simplified(2, 16, 128, 13, 10.0, 0.5, 0.3);
    MonteCarloOptions opt;
    opt.n_realizations = 10;
    for (auto _ : state)
        benchmark::DoNotOptimize(ergodic_secrecy_rate(cfg, DataKind::SZF, ANKind::SNS, opt).R_sec_mc);
}
BENCHMARK(BM_SecrecyRealizations)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
