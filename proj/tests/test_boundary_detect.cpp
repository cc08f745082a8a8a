#include <doctest.h>

#include <cmath>
#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "texttile/boundary_detect.hpp"
#include "texttile/errors.hpp"
#include "texttile/pipeline.hpp"

using namespace texttile;

namespace {

GapSeries series_of(std::vector<double> v) { return GapSeries{std::move(v), SeriesKind::smoothed}; }

}  // namespace

TEST_CASE("depth scores from hand-worked series") {
    auto d = depth_scores(series_of({0.2, 0.5, 0.3, 0.1, 0.4}));
    REQUIRE(d.depths.size() == 5);
    CHECK(d.depths[0] == doctest::Approx(0.3));
    CHECK(d.depths[1] == doctest::Approx(0.0));  // strict local max
    CHECK(d.depths[2] == doctest::Approx(0.2));
    CHECK(d.depths[3] == doctest::Approx(0.7));
    CHECK(d.depths[4] == doctest::Approx(0.0));

    // monotone increasing: the last gap has no higher peak to its right
    auto mono = depth_scores(series_of({0.1, 0.2, 0.3, 0.4}));
    CHECK(mono.depths.back() == doctest::Approx(0.0));

    CHECK_THROWS_AS(depth_scores(series_of({})), TooShortError);
}

TEST_CASE("depth scores match the exhaustive walk oracle") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 5 + static_cast<int>(gen::pick(rng, 46));
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(gen::unit(rng));
        // plateaus are common in smoothed data; inject some
        for (int i = 1; i < n; ++i)
            if (gen::pick(rng, 5) == 0) v[i] = v[i - 1];

        auto got = depth_scores(series_of(v));
        auto want = oracles::depth_scores(v);
        REQUIRE(got.depths.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(got.depths[i] == want[i]);  // exact
            CHECK(got.depths[i] >= 0.0);
        }

        // mean and population stddev
        double mean = 0;
        for (double d : want) mean += d;
        mean /= n;
        double var = 0;
        for (double d : want) var += (d - mean) * (d - mean);
        CHECK(got.mean == doctest::Approx(mean).epsilon(1e-12));
        CHECK(got.stddev == doctest::Approx(std::sqrt(var / n)).epsilon(1e-12));
    }
}

TEST_CASE("adding a constant shifts no depth or boundary") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + static_cast<int>(gen::pick(rng, 30));
        std::vector<double> v, shifted;
        double c = 1.0 + gen::unit(rng) * 10.0;
        for (int i = 0; i < n; ++i) v.push_back(gen::unit(rng));
        for (double x : v) shifted.push_back(x + c);

        auto d1 = depth_scores(series_of(v));
        auto d2 = depth_scores(series_of(shifted));
        for (std::size_t i = 0; i < d1.depths.size(); ++i)
            CHECK(d1.depths[i] == doctest::Approx(d2.depths[i]).epsilon(1e-9));
        CHECK(select_boundaries(d1, 3) == select_boundaries(d2, 3));
    }
}

TEST_CASE("strict plateau mode stops the walk at plateaus") {
    // rise, plateau, rise: the relaxed walk crosses the plateau to the far
    // peak, the strict walk stops at its near edge
    auto relaxed = depth_scores(series_of({0.1, 0.3, 0.3, 0.5}), PlateauMode::non_decreasing);
    auto strict = depth_scores(series_of({0.1, 0.3, 0.3, 0.5}), PlateauMode::strict);
    CHECK(relaxed.depths[0] == doctest::Approx(0.4));
    CHECK(strict.depths[0] == doctest::Approx(0.2));

    // equal-valued plateau at the peak changes nothing
    auto r2 = depth_scores(series_of({0.5, 0.5, 0.1, 0.4}), PlateauMode::non_decreasing);
    auto s2 = depth_scores(series_of({0.5, 0.5, 0.1, 0.4}), PlateauMode::strict);
    CHECK(r2.depths[2] == doctest::Approx(0.7));
    CHECK(s2.depths[2] == doctest::Approx(0.7));
}

TEST_CASE("select_boundaries applies cutoff and separation") {
    // all-equal depths: cutoff = mean, nothing strictly exceeds it
    DepthSeries flat{{0.2, 0.2, 0.2}, 0.2, 0.0};
    CHECK(select_boundaries(flat, 3).empty());

    // hand-evaluated greedy rule
    DepthSeries d = {{1.0, 0.0, 0.0, 0.0, 0.0, 0.9}, 0.0, 0.0};
    double mean = (1.0 + 0.9) / 6.0;
    double var = 0.0;
    for (double x : d.depths) var += (x - mean) * (x - mean);
    d.mean = mean;
    d.stddev = std::sqrt(var / 6.0);
    CHECK(select_boundaries(d, 3) == std::vector<int>{0, 5});

    // separation rejects the second-deepest gap when too close
    DepthSeries close{{1.0, 0.0, 0.9, 0.0, 0.0, 0.0}, 0.0, 0.0};
    close.mean = 1.9 / 6.0;
    double cvar = 0.0;
    for (double x : close.depths) cvar += (x - close.mean) * (x - close.mean);
    close.stddev = std::sqrt(cvar / 6.0);
    CHECK(select_boundaries(close, 3) == std::vector<int>{0});
    CHECK(select_boundaries(close, 1) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(select_boundaries(close, -1), Error);
}

TEST_CASE("accepted gaps always clear the separation") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(gen::pick(rng, 40));
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(gen::unit(rng));
        auto depths = depth_scores(series_of(v));
        int sep = static_cast<int>(gen::pick(rng, 5));
        auto gaps = select_boundaries(depths, sep);
        for (std::size_t i = 0; i + 1 < gaps.size(); ++i) CHECK(gaps[i + 1] - gaps[i] > sep);
        for (int g : gaps) CHECK(depths.depths[g] > depths.mean - depths.stddev / 2.0);
    }
}

TEST_CASE("nearest_paragraph_gap picks the closest break, ties earlier") {
    TokenizedDocument doc;
    doc.num_paragraphs = 4;
    doc.sequences.resize(30);
    doc.break_gaps = {10, 18, 25};
    doc.paragraph_gaps = {10, 18, 25};

    CHECK(nearest_paragraph_gap(17, doc) == 18);
    CHECK(nearest_paragraph_gap(3, doc) == 10);
    CHECK(nearest_paragraph_gap(28, doc) == 25);
    CHECK(nearest_paragraph_gap(10, doc) == 10);

    TokenizedDocument tie;
    tie.num_paragraphs = 3;
    tie.sequences.resize(30);
    tie.break_gaps = {10, 18};
    tie.paragraph_gaps = {10, 18};
    CHECK(nearest_paragraph_gap(14, tie) == 10);  // equidistant -> earlier

    TokenizedDocument solo;
    solo.num_paragraphs = 1;
    solo.sequences.resize(5);
    CHECK_THROWS_AS(nearest_paragraph_gap(1, solo), NoParagraphGapsError);
}

TEST_CASE("snap_to_paragraphs renumbers and deduplicates") {
    TokenizedDocument doc;
    doc.num_paragraphs = 4;
    doc.sequences.resize(30);
    doc.break_gaps = {10, 18, 25};
    doc.paragraph_gaps = {10, 18, 25};

    CHECK(snap_to_paragraphs({17}, doc) == std::vector<int>{1});
    CHECK(snap_to_paragraphs({17, 19, 2}, doc) == std::vector<int>{0, 1});  // 17,19 collapse
    CHECK(snap_to_paragraphs({}, doc).empty());
}

TEST_CASE("segment finds the seam of a two-topic document") {
    std::mt19937_64 rng(53);
    auto fixture = gen::make_two_topic_doc(rng);
    RunConfig cfg;
    Segmentation seg = run_segmentation({fixture.text, "t"}, cfg);
    bool found = false;
    for (const auto& b : seg.boundaries)
        if (b.paragraph == fixture.seam_paragraph) found = true;
    CHECK(found);
    for (std::size_t i = 0; i + 1 < seg.boundaries.size(); ++i)
        CHECK(seg.boundaries[i].paragraph < seg.boundaries[i + 1].paragraph);
}

TEST_CASE("segment rejects degenerate documents") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_segmentation({"only one paragraph of text here", "t"}, cfg),
                    NoParagraphGapsError);
    CHECK_THROWS_AS(run_segmentation({"", "t"}, cfg), EmptyDocumentError);
    CHECK_THROWS_AS(run_segmentation({"12 34 56\n\n78 90", "t"}, cfg), NoTokensError);
    // two short paragraphs: only one sequence at w=20
    CHECK_THROWS_AS(run_segmentation({"alpha beta gamma\n\ndelta epsilon", "t"}, cfg),
                    TooShortError);
}

TEST_CASE("segment is deterministic") {
    std::mt19937_64 rng(54);
    auto fixture = gen::make_two_topic_doc(rng);
    RunConfig cfg;
    Segmentation a = run_segmentation({fixture.text, "t"}, cfg);
    Segmentation b = run_segmentation({fixture.text, "t"}, cfg);
    REQUIRE(a.boundaries.size() == b.boundaries.size());
    for (std::size_t i = 0; i < a.boundaries.size(); ++i) {
        CHECK(a.boundaries[i].paragraph == b.boundaries[i].paragraph);
        CHECK(a.boundaries[i].source_gap == b.boundaries[i].source_gap);
        CHECK(a.boundaries[i].depth == b.boundaries[i].depth);
    }
    CHECK(a.cutoff == b.cutoff);
}

TEST_CASE("outline-shaped articles recover most seams") {
    std::mt19937_64 rng(55);
    // 21 paragraphs in segments of 3,2,3,4,1,3,2,2,1
    auto doc = gen::make_outline_doc(rng, {3, 2, 3, 4, 1, 3, 2, 2, 1});
    RunConfig cfg;
    Segmentation seg = run_segmentation({doc.text, "t"}, cfg);
    std::set<int> found;
    for (const auto& b : seg.boundaries) found.insert(b.paragraph);
    int hit = 0;
    for (int seam : doc.seams)
        if (found.count(seam)) ++hit;
    CHECK(hit * 2 >= static_cast<int>(doc.seams.size()));  // majority
}
