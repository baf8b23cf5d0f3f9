#include "generators.hpp"
#include "support.hpp"

#include <metaopt/consequence.hpp>
#include <metaopt/metaenc.hpp>
#include <metaopt/optimize.hpp>
#include <metaopt/parser.hpp>
#include <metaopt/reify.hpp>
#include <metaopt/semantics.hpp>

#include <benchmark/benchmark.h>

using namespace metaopt;

namespace {

std::vector<Program> corpus(int atoms, int count, bool minimize = false) {
    testing::ProgramGenerator gen(900 + static_cast<std::uint64_t>(atoms));
    const testing::ProgramShape shape{
        .atoms = atoms, .max_rules = atoms + 2, .minimize = minimize, .levels = 2, .weights = 2, .choice = 0.6};
    std::vector<Program> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(gen.program(shape));
    }
    return out;
}

void BM_ParseRender(benchmark::State& state) {
    const std::string text = testing::read_fixture("repair.lp");
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_program(parse_program(text)));
    }
}
BENCHMARK(BM_ParseRender);

void BM_EnumerateRunningExample(benchmark::State& state) {
    const Program p = testing::fixture_program("pi0.lp");
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_answer_sets(p));
    }
}
BENCHMARK(BM_EnumerateRunningExample);

void BM_EnumerateRandom(benchmark::State& state) {
    const auto programs = corpus(static_cast<int>(state.range(0)), 16);
    for (auto _ : state) {
        for (const auto& p : programs) {
            benchmark::DoNotOptimize(enumerate_answer_sets(p));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(programs.size()));
}
BENCHMARK(BM_EnumerateRandom)->DenseRange(4, 12, 4);

void BM_WaitLevels(benchmark::State& state) {
    const Program p = testing::fixture_program("pi0.lp");
    const auto d = sccs(p);
    const Interpretation x{Atom("r"), Atom("t")};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wait_levels(p, d, x, 0));
    }
}
BENCHMARK(BM_WaitLevels);

void BM_Reify(benchmark::State& state) {
    const Program p = testing::fixture_program("repair.lp");
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_reified(reify(p)));
    }
}
BENCHMARK(BM_Reify);

void BM_OptimizeRepairNative(benchmark::State& state) {
    const Program p = testing::fixture_program("repair.lp");
    const CriteriaSet c = parse_criteria(testing::read_fixture("repair.crit"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_answer_sets(p, c));
    }
}
BENCHMARK(BM_OptimizeRepairNative);

void BM_BuildMetaProgram(benchmark::State& state) {
    const Reification facts = reify(testing::fixture_program("repair.lp"));
    const CriteriaSet c = parse_criteria(testing::read_fixture("repair.crit"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_meta_program(facts, c));
    }
}
BENCHMARK(BM_BuildMetaProgram);

void BM_SolveMetaRepair(benchmark::State& state) {
    const MetaProgram mp = build_meta_program(reify(testing::fixture_program("repair.lp")),
                                              parse_criteria(testing::read_fixture("repair.crit")));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_meta(mp));
    }
}
BENCHMARK(BM_SolveMetaRepair)->Unit(benchmark::kMillisecond);

void BM_CrosscheckRandom(benchmark::State& state) {
    const int atoms = static_cast<int>(state.range(0));
    const auto programs = corpus(atoms, 8, true);
    testing::ProgramGenerator gen(77);
    const testing::ProgramShape shape{.atoms = atoms, .minimize = true, .levels = 2, .weights = 2};
    std::vector<CriteriaSet> crit;
    for (const auto& p : programs) {
        crit.push_back(gen.criteria(shape, p));
    }
    for (auto _ : state) {
        for (std::size_t i = 0; i < programs.size(); ++i) {
            benchmark::DoNotOptimize(crosscheck(programs[i], crit[i]));
        }
    }
}
BENCHMARK(BM_CrosscheckRandom)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
