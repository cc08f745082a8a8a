#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "texttile/errors.hpp"
#include "texttile/lexical_scoring.hpp"

using namespace texttile;

TEST_CASE("block_vector sums frequencies over the range") {
    TermTable table = gen::table_from_counts({{{"a", 2}}, {{"a", 1}, {"b", 1}}});
    auto v = block_vector(table, 0, 1);
    CHECK(v.at("a") == doctest::Approx(3.0));
    CHECK(v.at("b") == doctest::Approx(1.0));

    auto single = block_vector(gen::table_from_counts({{{"a", 2}}}), 0, 0);
    CHECK(single.size() == 1);
    CHECK(single.at("a") == doctest::Approx(2.0));

    CHECK_THROWS_AS(block_vector(table, 0, 2), RangeError);
    CHECK_THROWS_AS(block_vector(table, -1, 0), RangeError);
    CHECK_THROWS_AS(block_vector(table, 1, 0), RangeError);
}

TEST_CASE("whole-document block equals whole-document counts") {
    std::mt19937_64 rng(17);
    auto seqs = gen::random_seq_counts(rng, 6, 12, 6);
    auto table = gen::table_from_counts(seqs);
    auto v = block_vector(table, 0, 5);
    std::map<std::string, long> total;
    for (const auto& seq : seqs)
        for (const auto& [t, f] : seq) total[t] += f;
    REQUIRE(v.size() == total.size());
    for (const auto& [t, f] : total) CHECK(v.at(t) == doctest::Approx(double(f)));
}

TEST_CASE("cosine basics") {
    TermWeights v{{"a", 3}, {"b", 1}};
    CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cosine({{"a", 1}}, {{"b", 1}}) == 0.0);
    CHECK(cosine({}, {{"a", 1}}) == 0.0);
    CHECK(cosine({}, {}) == 0.0);
    // 5 / sqrt(50)
    CHECK(cosine({{"a", 2}, {"b", 1}}, {{"a", 1}, {"b", 3}}) ==
          doctest::Approx(5.0 / std::sqrt(50.0)).epsilon(1e-12));
}

TEST_CASE("cosine matches the brute-force oracle") {
    std::mt19937_64 rng(42);
    std::set<std::string> used;
    auto words = gen::vocab(rng, 60, used);
    for (int trial = 0; trial < 1000; ++trial) {
        TermWeights v1, v2;
        int n1 = static_cast<int>(gen::pick(rng, 31));
        int n2 = static_cast<int>(gen::pick(rng, 31));
        for (int i = 0; i < n1; ++i)
            v1[words[gen::pick(rng, words.size())]] = 1.0 + gen::pick(rng, 9);
        for (int i = 0; i < n2; ++i)
            v2[words[gen::pick(rng, words.size())]] = 1.0 + gen::pick(rng, 9);
        double got = cosine(v1, v2);
        double want = oracles::cosine(v1, v2);
        CHECK(std::abs(got - want) < 1e-12);
        CHECK(std::abs(cosine(v2, v1) - got) < 1e-15);  // symmetry
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
    }
}

TEST_CASE("cosine is invariant under scaling one vector") {
    std::mt19937_64 rng(43);
    std::set<std::string> used;
    auto words = gen::vocab(rng, 20, used);
    for (int trial = 0; trial < 200; ++trial) {
        TermWeights v1, v2;
        for (int i = 0; i < 8; ++i) {
            v1[words[gen::pick(rng, words.size())]] = 1.0 + gen::pick(rng, 9);
            v2[words[gen::pick(rng, words.size())]] = 1.0 + gen::pick(rng, 9);
        }
        double c = 0.5 + gen::unit(rng) * 4.0;
        TermWeights scaled = v1;
        for (auto& [t, w] : scaled) w *= c;
        CHECK(std::abs(cosine(scaled, v2) - cosine(v1, v2)) < 1e-12);
    }
}

TEST_CASE("block series on identical sequences is all ones") {
    TermTable table = gen::table_from_counts({{{"a", 2}, {"b", 1}}, {{"a", 2}, {"b", 1}}});
    auto series = block_similarity_series(table, BlockConfig{1});
    REQUIRE(series.values.size() == 1);
    CHECK(series.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(series.kind == SeriesKind::raw_block);
}

TEST_CASE("block series equals the nested-loop oracle") {
    std::mt19937_64 rng(44);
    const int ks[] = {1, 2, 3, 6};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(gen::pick(rng, 36));
        auto seqs = gen::random_seq_counts(rng, n, 15, 8);
        auto table = gen::table_from_counts(seqs);
        int k = ks[gen::pick(rng, 4)];
        auto series = block_similarity_series(table, BlockConfig{k});
        auto want = oracles::block_series(seqs, k);
        REQUIRE(series.values.size() == want.size());
        REQUIRE(series.values.size() == static_cast<std::size_t>(n - 1));
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(series.values[i] - want[i]) < 1e-12);
    }
}

TEST_CASE("block series k+1 extent widens both blocks") {
    std::mt19937_64 rng(45);
    auto seqs = gen::random_seq_counts(rng, 12, 10, 6);
    auto table = gen::table_from_counts(seqs);
    auto series = block_similarity_series(table, BlockConfig{2, BlockExtent::k_plus_1});
    auto want = oracles::block_series(seqs, 2, true);
    REQUIRE(series.values.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(std::abs(series.values[i] - want[i]) < 1e-12);
}

TEST_CASE("interior sequences join exactly 2k block computations") {
    const int n = 20;
    for (int k : {1, 2, 3, 6}) {
        std::vector<int> participation(n, 0);
        for (int i = 0; i < n - 1; ++i) {
            for (int s = std::max(0, i - k + 1); s <= i; ++s) ++participation[s];
            for (int s = i + 1; s <= std::min(n - 1, i + k); ++s) ++participation[s];
        }
        for (int s = k; s <= n - 1 - k; ++s) CHECK(participation[s] == 2 * k);
    }
}

TEST_CASE("block series rejects degenerate inputs") {
    CHECK_THROWS_AS(block_similarity_series(gen::table_from_counts({{{"a", 1}}}), BlockConfig{1}),
                    TooShortError);
}

TEST_CASE("extract_chains splits runs on hiatus") {
    TermTable table;
    table.num_sequences = 10;
    table.postings["t"] = {{1, 1}, {2, 1}, {3, 1}, {8, 1}, {9, 1}};
    auto chains = extract_chains(table, ChainConfig{2, 2});
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].start == 1);
    CHECK(chains[0].end == 3);
    CHECK(chains[1].start == 8);
    CHECK(chains[1].end == 9);

    table.postings["t"] = {{4, 1}};
    CHECK(extract_chains(table, ChainConfig{2, 2}).empty());

    table.postings["t"] = {{0, 1}, {1, 1}, {2, 1}};
    auto one = extract_chains(table, ChainConfig{5, 2});
    REQUIRE(one.size() == 1);
    CHECK(one[0].start == 0);
    CHECK(one[0].end == 2);
}

TEST_CASE("extract_chains matches the run-splitting oracle") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 5 + static_cast<int>(gen::pick(rng, 40));
        std::set<int> occ_set;
        int m = 1 + static_cast<int>(gen::pick(rng, 12));
        for (int i = 0; i < m; ++i) occ_set.insert(static_cast<int>(gen::pick(rng, n)));
        std::vector<int> occurrences(occ_set.begin(), occ_set.end());

        TermTable table;
        table.num_sequences = n;
        for (int s : occurrences) table.postings["t"].push_back({s, 1});

        int hiatus = 1 + static_cast<int>(gen::pick(rng, 6));
        int min_len = 2 + static_cast<int>(gen::pick(rng, 3));
        auto got = extract_chains(table, ChainConfig{hiatus, min_len});
        auto want = oracles::chains(occurrences, hiatus, min_len);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(got[i].start == want[i].first);
            CHECK(got[i].end == want[i].second);
        }
    }
}

TEST_CASE("chain_score_series counts spanning chains") {
    auto series = chain_score_series({{"t", 0, 3}}, 5);
    CHECK(series.values == std::vector<double>{1, 1, 1, 0});
    CHECK(series.kind == SeriesKind::raw_chain);

    CHECK(chain_score_series({}, 5).values == std::vector<double>{0, 0, 0, 0});

    auto two = chain_score_series({{"a", 0, 1}, {"b", 2, 4}}, 5);
    CHECK(two.values == std::vector<double>{1, 0, 1, 1});
}

TEST_CASE("chain series stays within [0, chain count]") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(gen::pick(rng, 20));
        std::vector<Chain> chains;
        int c = static_cast<int>(gen::pick(rng, 8));
        for (int i = 0; i < c; ++i) {
            int s = static_cast<int>(gen::pick(rng, n));
            int e = s + static_cast<int>(gen::pick(rng, n - s));
            chains.push_back({"t", s, e});
        }
        for (auto scoring : {ChainScoring::spanning, ChainScoring::boundary_events}) {
            auto series = chain_score_series(chains, n, scoring);
            REQUIRE(series.values.size() == static_cast<std::size_t>(n - 1));
            for (double v : series.values) {
                CHECK(v >= 0.0);
                CHECK(v <= static_cast<double>(chains.size()));
            }
        }
        auto want = oracles::spanning_counts(
            [&] {
                std::vector<std::pair<int, int>> ps;
                for (const auto& ch : chains) ps.emplace_back(ch.start, ch.end);
                return ps;
            }(),
            n);
        auto got = chain_score_series(chains, n);
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.values[i] == want[i]);
    }
}

TEST_CASE("smoothing defaults and hand-computed window means") {
    GapSeries s{{0.0, 1.0, 0.0}, SeriesKind::raw_block};
    auto out = smooth(s);  // window 3, 1 round
    REQUIRE(out.values.size() == 3);
    CHECK(out.values[0] == doctest::Approx(0.5));
    CHECK(out.values[1] == doctest::Approx(1.0 / 3.0));
    CHECK(out.values[2] == doctest::Approx(0.5));
    CHECK(out.kind == SeriesKind::smoothed);

    GapSeries c{{2.0, 2.0, 2.0, 2.0}, SeriesKind::raw_block};
    CHECK(smooth(c, 3, 1).values == std::vector<double>{2, 2, 2, 2});

    CHECK(smooth(s, 3, 0).values == s.values);
    CHECK(smooth(s, 3, 0).kind == SeriesKind::smoothed);

    CHECK_THROWS_AS(smooth(s, 2, 1), Error);
    CHECK_THROWS_AS(smooth(s, -1, 1), Error);
    CHECK_THROWS_AS(smooth(s, 3, -1), Error);
}

TEST_CASE("smoothing matches the oracle and contracts the range") {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(gen::pick(rng, 30));
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(gen::unit(rng));
        int window = 1 + 2 * static_cast<int>(gen::pick(rng, 3));
        int rounds = static_cast<int>(gen::pick(rng, 3));

        auto got = smooth(GapSeries{v, SeriesKind::raw_block}, window, rounds);
        std::vector<double> want = v;
        for (int r = 0; r < rounds; ++r) want = oracles::smooth_once(want, window);
        REQUIRE(got.values.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(got.values[i] == doctest::Approx(want[i]).epsilon(1e-12));

        double in_min = *std::min_element(v.begin(), v.end());
        double in_max = *std::max_element(v.begin(), v.end());
        for (double x : got.values) {
            CHECK(x >= in_min - 1e-12);
            CHECK(x <= in_max + 1e-12);
        }
    }
}

TEST_CASE("smoothing conserves mass when no window is clipped") {
    // zeros wider than the half-window at both ends: every nonzero value is
    // averaged into exactly `window` full windows, so the total is unchanged
    std::mt19937_64 rng(49);
    for (int trial = 0; trial < 100; ++trial) {
        int window = 3 + 2 * static_cast<int>(gen::pick(rng, 2));
        int interior = 5 + static_cast<int>(gen::pick(rng, 20));
        std::vector<double> v(window, 0.0);
        for (int i = 0; i < interior; ++i) v.push_back(gen::unit(rng));
        v.insert(v.end(), window, 0.0);

        auto out = smooth(GapSeries{v, SeriesKind::raw_block}, window, 1);
        double before = std::accumulate(v.begin(), v.end(), 0.0);
        double after = std::accumulate(out.values.begin(), out.values.end(), 0.0);
        CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
}
