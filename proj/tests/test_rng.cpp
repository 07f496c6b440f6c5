#include <doctest.h>

#include <vector>

#include "crush/rng.hpp"

using namespace crush;

TEST_CASE("streams are reproducible and keyed") {
    RngStream a(42, StreamPurpose::levelSample, 3, 17);
    RngStream b(42, StreamPurpose::levelSample, 3, 17);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // any key component change moves the stream
    RngStream base(42, StreamPurpose::levelSample, 3, 17);
    RngStream seed(43, StreamPurpose::levelSample, 3, 17);
    RngStream purpose(42, StreamPurpose::monteCarlo, 3, 17);
    RngStream level(42, StreamPurpose::levelSample, 4, 17);
    RngStream sample(42, StreamPurpose::levelSample, 3, 18);
    const std::uint64_t x = base.next_u64();
    CHECK(x != seed.next_u64());
    CHECK(x != purpose.next_u64());
    CHECK(x != level.next_u64());
    CHECK(x != sample.next_u64());
}

TEST_CASE("below() stays in range and looks uniform") {
    RngStream rng(7, StreamPurpose::generic);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(1) == 0);

    std::vector<int> counts(6, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        const auto v = rng.below(6);
        REQUIRE(v < 6);
        ++counts[v];
    }
    // each bin expects 10000; 6 sigma is ~550
    for (int c : counts) {
        CHECK(c > 9300);
        CHECK(c < 10700);
    }
}

TEST_CASE("unit_real lies in [0,1)") {
    RngStream rng(11, StreamPurpose::generic);
    double sum = 0;
    for (int i = 0; i < 20000; ++i) {
        const double u = rng.unit_real();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("master seed accessor") {
    RngStream rng(123, StreamPurpose::uniformity, 0, 0);
    CHECK(rng.master_seed() == 123);
}
