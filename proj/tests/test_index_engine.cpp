#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <topoidx/generators.hpp>
#include <topoidx/index_engine.hpp>

#include "test_support.hpp"

using namespace topoidx;
using Catch::Matchers::WithinAbs;

namespace {
FactoredNumber fn(FactoredNumber::FactorMap factors) { return FactoredNumber(std::move(factors)); }
} // namespace

TEST_CASE("index spec parameter modes") {
    const IndexSpec exact = IndexSpec::edge_sum_power(2);
    CHECK(exact.exact());
    CHECK(exact.integer_parameter() == 2);
    CHECK(exact.numeric_parameter() == 2.0);

    const IndexSpec real = IndexSpec::edge_sum_power_real(0.5);
    CHECK_FALSE(real.exact());
    CHECK(real.numeric_parameter() == 0.5);
    CHECK_THROWS_AS(real.integer_parameter(), NonIntegerParameterError);
}

TEST_CASE("named indices map to their defining specs") {
    CHECK(named_spec(NamedIndex::first_multiplicative_zagreb) == IndexSpec::vertex_power(2));
    CHECK(named_spec(NamedIndex::second_multiplicative_zagreb) ==
          IndexSpec::edge_product_power(1));
    CHECK(named_spec(NamedIndex::narumi_katayama) == IndexSpec::vertex_power(1));
    CHECK(named_spec(NamedIndex::eliasi_first) == IndexSpec::edge_sum_power(1));
    CHECK(named_spec(NamedIndex::hyper_zagreb_first) == IndexSpec::edge_sum_power(2));
    CHECK(named_spec(NamedIndex::hyper_zagreb_second) == IndexSpec::edge_product_power(2));

    for (NamedIndex idx : kAllNamedIndices)
        CHECK(named_from_token(std::string(named_token(idx))) == idx);
    CHECK_FALSE(named_from_token("wiener").has_value());
}

TEST_CASE("compute_index on the base-case graphs") {
    const auto pah1 = generate_pah({1});
    CHECK(compute_index(pah1, IndexSpec::edge_product_power(1)) == fn({{3, 18}}));
    CHECK(compute_index(pah1, IndexSpec::vertex_power(1)) == fn({{3, 6}}));
    CHECK(to_decimal(compute_index(pah1, IndexSpec::vertex_power(1))).text == "729");

    const auto b31 = generate_benzenoid({3, 1});
    CHECK(compute_index(b31, IndexSpec::vertex_power(1)) == fn({{2, 12}, {3, 12}}));

    const auto k2 = MolecularGraph::from_edges(2, {{0, 1}});
    CHECK(compute_index(k2, IndexSpec::edge_product_power(1)) == FactoredNumber::one());
}

TEST_CASE("compute_named special cases") {
    const auto pah1 = generate_pah({1});
    CHECK(compute_named(pah1, NamedIndex::first_multiplicative_zagreb) == fn({{3, 12}}));
    CHECK(compute_named(pah1, NamedIndex::hyper_zagreb_second) == fn({{3, 36}}));

    const auto b31 = generate_benzenoid({3, 1});
    // 4^6 * 5^12 * 6^12 canonicalizes to 2^24 * 3^12 * 5^12
    CHECK(compute_named(b31, NamedIndex::eliasi_first) == fn({{2, 24}, {3, 12}, {5, 12}}));
}

TEST_CASE("compute_via_partitions evaluates partition products") {
    DegreePartition dp;
    dp.counts = {{1, 6}, {3, 6}};
    EdgePartition ep;
    ep.counts = {{{1, 3}, 6}, {{3, 3}, 6}};
    CHECK(compute_via_partitions(dp, ep, IndexSpec::edge_sum_power(1)) == fn({{2, 18}, {3, 6}}));

    DegreePartition b31_dp;
    b31_dp.counts = {{2, 12}, {3, 12}};
    EdgePartition b31_ep;
    b31_ep.counts = {{{2, 2}, 6}, {{2, 3}, 12}, {{3, 3}, 12}};
    // 4^6 * 6^12 * 9^12
    CHECK(compute_via_partitions(b31_dp, b31_ep, IndexSpec::edge_product_power(1)) ==
          pow(factor_small(4), 6) * pow(factor_small(6), 12) * pow(factor_small(9), 12));

    CHECK(compute_via_partitions({}, {}, IndexSpec::vertex_power(3)) == FactoredNumber::one());
    CHECK(compute_via_partitions({}, {}, IndexSpec::edge_sum_power(-2)) == FactoredNumber::one());
}

TEST_CASE("isolated vertices poison vertex-power products only") {
    const auto g = MolecularGraph::from_edges(3, {{0, 1}}); // vertex 2 isolated
    CHECK_THROWS_AS(compute_index(g, IndexSpec::vertex_power(1)), IsolatedVertexError);
    CHECK_THROWS_AS(compute_index_log(g, IndexSpec::vertex_power_real(1.0)),
                    IsolatedVertexError);
    CHECK(compute_index(g, IndexSpec::edge_sum_power(1)) == factor_small(2));
    CHECK(compute_index(g, IndexSpec::edge_product_power(2)) == FactoredNumber::one());

    const auto single = MolecularGraph::from_edges(1, {});
    CHECK_THROWS_AS(compute_index(single, IndexSpec::vertex_power(2)), IsolatedVertexError);
}

TEST_CASE("exact mode rejects real parameters") {
    const auto k2 = MolecularGraph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(compute_index(k2, IndexSpec::vertex_power_real(2.0)),
                    NonIntegerParameterError);
}

TEST_CASE("per-element products equal partition-aggregated products") {
    std::mt19937_64 rng(20250101);
    std::vector<MolecularGraph> graphs;
    for (int i = 0; i < 40; ++i) graphs.push_back(testing::random_connected_graph(rng));
    graphs.push_back(generate_pah({3}));
    graphs.push_back(generate_benzenoid({4, 2}));

    for (const auto& g : graphs) {
        for (const std::int64_t p : {-1, 1, 2, 3}) {
            for (const IndexSpec& spec : {IndexSpec::vertex_power(p), IndexSpec::edge_sum_power(p),
                                          IndexSpec::edge_product_power(p)}) {
                REQUIRE(testing::per_element_product(g, spec) == compute_index(g, spec));
            }
        }
    }
}

TEST_CASE("exponent linearity") {
    std::mt19937_64 rng(77);
    const MolecularGraph g = testing::random_connected_graph(rng);
    for (const IndexKind kind :
         {IndexKind::vertex_power, IndexKind::edge_sum_power, IndexKind::edge_product_power}) {
        const FactoredNumber base = compute_index(g, IndexSpec{kind, BigInt(1)});
        for (const std::int64_t a : {-3, -1, 0, 2, 5})
            REQUIRE(compute_index(g, IndexSpec{kind, BigInt(a)}) == pow(base, a));
    }
}

TEST_CASE("named indices agree with their general specs on every graph") {
    std::mt19937_64 rng(13);
    std::vector<MolecularGraph> graphs{generate_pah({2}), generate_benzenoid({3, 1})};
    for (int i = 0; i < 10; ++i) graphs.push_back(testing::random_connected_graph(rng));
    for (const auto& g : graphs)
        for (NamedIndex idx : kAllNamedIndices)
            REQUIRE(compute_named(g, idx) == compute_index(g, named_spec(idx)));
}

TEST_CASE("log-domain computation matches exact values") {
    const auto pah1 = generate_pah({1});
    CHECK_THAT(compute_index_log(pah1, IndexSpec::edge_product_power_real(1.0)),
               WithinAbs(18 * std::log10(3.0), 1e-12));
    CHECK_THAT(compute_index_log(pah1, IndexSpec::vertex_power_real(2.0)),
               WithinAbs(12 * std::log10(3.0), 1e-12));

    const auto k2 = MolecularGraph::from_edges(2, {{0, 1}});
    CHECK_THAT(compute_index_log(k2, IndexSpec::edge_sum_power_real(0.5)),
               WithinAbs(0.5 * std::log10(2.0), 1e-12));

    SECTION("integer parameters, graphs up to 1e5 edges") {
        std::vector<MolecularGraph> graphs;
        graphs.push_back(generate_pah({105})); // 99855 edges
        REQUIRE(graphs.back().edge_count() >= 99'000);
        graphs.push_back(generate_benzenoid({12, 12}));
        std::mt19937_64 rng(5);
        graphs.push_back(testing::random_connected_graph(rng));
        for (const auto& g : graphs) {
            for (const std::int64_t p : {-1, 1, 2, 3}) {
                for (const IndexKind kind : {IndexKind::vertex_power, IndexKind::edge_sum_power,
                                             IndexKind::edge_product_power}) {
                    const IndexSpec spec{kind, BigInt(p)};
                    REQUIRE_THAT(compute_index_log(g, spec),
                                 WithinAbs(to_log10(compute_index(g, spec)), 1e-9));
                }
            }
        }
    }
}
