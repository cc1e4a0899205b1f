// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "dhlut/channel.hpp"
#include "dhlut/errors.hpp"
#include "dhlut/metrics.hpp"
#include "dhlut/shaping.hpp"

using namespace dhlut;

TEST_CASE("hard_decide: nearest level, clipping, midpoint rules") {
    CHECK(hard_decide(0.2) == 1);
    CHECK(hard_decide(-0.2) == -1);
    CHECK(hard_decide(8.4) == 7);
    CHECK(hard_decide(-9.0) == -7);
    CHECK(hard_decide(3.1) == 3);
    CHECK(hard_decide(4.9) == 5);

    // Midpoints resolve toward the smaller magnitude; 0 goes to +1.
    CHECK(hard_decide(2.0) == 1);
    CHECK(hard_decide(-2.0) == -1);
    CHECK(hard_decide(4.0) == 3);
    CHECK(hard_decide(-6.0) == -5);
    CHECK(hard_decide(0.0) == 1);

    CHECK_THROWS_AS(hard_decide(std::nan("")), InvalidInput);
    CHECK_THROWS_AS(hard_decide(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST_CASE("hard_decide: idempotent on levels") {
    for (int a : kAskLevels) {
        CHECK(hard_decide(static_cast<double>(a)) == a);
    }
}

TEST_CASE("snr_db: exact cases") {
    auto ref = sample_frame(maxwell_boltzmann(0.0), 2, 100, 1);
    SUBCASE("zero error caps at 200") {
        CHECK(snr_db(ref, ref) == 200.0);
    }
    SUBCASE("error power 1/100 of reference power gives 20 dB") {
        SymbolFrame sig = ref;
        sig.discrete = false;
        long double rp = 0.0L;
        for (double v : ref.data) rp += static_cast<long double>(v) * v;
        const double e = std::sqrt(static_cast<double>(rp) / 100.0 / ref.data.size());
        for (double& v : sig.data) v += e;
        CHECK(snr_db(ref, sig) == doctest::Approx(20.0).epsilon(1e-12));
    }
    SUBCASE("zero reference power is degenerate") {
        SymbolFrame z = SymbolFrame::make(1, 4, false, 0);
        CHECK_THROWS_AS(snr_db(z, z), DegenerateDenominator);
    }
}

TEST_CASE("snr_db: matches direct evaluation on random frames") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> noise(-0.4, 0.4);
    for (int trial = 0; trial < 20; ++trial) {
        auto ref = sample_frame(maxwell_boltzmann(0.01), 2, 257, 10 + trial);
        SymbolFrame sig = ref;
        sig.discrete = false;
        for (double& v : sig.data) v += noise(gen);
        double rp = 0.0, ep = 0.0;
        for (std::size_t i = 0; i < ref.data.size(); ++i) {
            rp += ref.data[i] * ref.data[i];
            const double d = sig.data[i] - ref.data[i];
            ep += d * d;
        }
        const double expected = 10.0 * std::log10(rp / ep);
        CHECK(std::abs(snr_db(ref, sig) - expected) <= 1e-10);
    }
}

TEST_CASE("snr_db: lane order invariant and decreasing in noise") {
    auto ref = sample_frame(maxwell_boltzmann(0.02), 2, 4096, 77);
    SymbolFrame swapped = ref;
    for (int k = 0; k < ref.length; ++k) {
        swapped.at(0, k) = ref.at(1, k);
        swapped.at(1, k) = ref.at(0, k);
    }
    SymbolFrame sig = ref;
    sig.discrete = false;
    std::mt19937 gen(5);
    std::normal_distribution<double> n01(0.0, 0.1);
    for (double& v : sig.data) v += n01(gen);
    SymbolFrame sig_swapped = swapped;
    sig_swapped.discrete = false;
    for (int k = 0; k < ref.length; ++k) {
        sig_swapped.at(0, k) = sig.at(1, k);
        sig_swapped.at(1, k) = sig.at(0, k);
    }
    CHECK(snr_db(ref, sig) == doctest::Approx(snr_db(swapped, sig_swapped)).epsilon(1e-14));

    double prev = 1e9;
    for (double sigma : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        ChannelModel model{{1.0}, {0.0}, sigma};
        const auto noisy = apply_channel(model, ref, 123);
        const double s = snr_db(ref, noisy);
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("ber: exact counts") {
    auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 64, 9);
    SUBCASE("identical frames") {
        const auto rep = ber(tx, tx);
        CHECK(rep.ber == 0.0);
        CHECK(rep.ser == 0.0);
        CHECK(rep.symbols_counted == 64);
    }
    SUBCASE("every symbol decided one level off gives ser 1, ber 1/3") {
        SymbolFrame off = tx;
        for (double& v : off.data) {
            v = v == 7.0 ? 5.0 : v + 2.0;  // adjacent level, Gray distance 1
        }
        const auto rep = ber(tx, off);
        CHECK(rep.ser == 1.0);
        CHECK(rep.ber == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("shape mismatch rejected") {
        auto other = sample_frame(maxwell_boltzmann(0.0), 1, 32, 9);
        CHECK_THROWS_AS(ber(tx, other), InvalidInput);
    }
}

TEST_CASE("ber: random error pattern matches a bit-count oracle") {
    std::mt19937 gen(31);
    auto tx = sample_frame(maxwell_boltzmann(0.03), 2, 999, 4);
    SymbolFrame decided = tx;
    std::uniform_int_distribution<int> level(0, 7);
    std::bernoulli_distribution flip(0.1);
    for (double& v : decided.data) {
        if (flip(gen)) v = kAskLevels[level(gen)];
    }
    // Oracle: per-bit comparison through the label table.
    auto bits_of = [](int a) {
        const unsigned i = static_cast<unsigned>((a + 7) / 2);
        return i ^ (i >> 1);
    };
    std::int64_t bit_errs = 0, sym_errs = 0, total = 0;
    for (std::size_t i = 0; i < tx.data.size(); ++i) {
        const int a = static_cast<int>(tx.data[i]);
        const int b = static_cast<int>(decided.data[i]);
        ++total;
        if (a != b) ++sym_errs;
        const unsigned diff = bits_of(a) ^ bits_of(b);
        for (int bit = 0; bit < 3; ++bit) bit_errs += (diff >> bit) & 1u;
    }
    const auto rep = ber(tx, decided);
    CHECK(rep.symbols_counted == total);
    CHECK(rep.ser == static_cast<double>(sym_errs) / total);
    CHECK(rep.ber == static_cast<double>(bit_errs) / (3.0 * total));
    CHECK(rep.ber <= rep.ser);
}

TEST_CASE("ber and snr_db skip edge symbols") {
    auto tx = sample_frame(maxwell_boltzmann(0.0), 1, 50, 2);
    SymbolFrame sig = tx;
    sig.discrete = false;
    sig.edge_len = 3;
    sig.at(0, 0) = 100.0;  // inside the edge region, must be ignored
    sig.at(0, 1) = -100.0;
    CHECK(snr_db(tx, sig) == 200.0);

    SymbolFrame decided = tx;
    decided.edge_len = 3;
    decided.at(0, 2) = tx.at(0, 2) == 7.0 ? -7.0 : 7.0;
    const auto rep = ber(tx, decided);
    CHECK(rep.ser == 0.0);
    CHECK(rep.symbols_counted == 47);
}
