#include <random>

#include "support/fixtures.hpp"

using namespace kneading;
using fixture::code_of;

namespace {

Sequence periodic(const std::string& w) { return Sequence(Alphabet::bimodal, w, Periodicity::periodic); }

std::string random_word(std::mt19937& rng, std::size_t max_len, std::string_view letters = "LMR") {
    std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, letters.size() - 1);
    std::string w(len(rng), 'L');
    for (char& c : w) c = letters[pick(rng)];
    return w;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("symbols carry rank and orientation") {
    CHECK(make_symbol(Alphabet::bimodal, 'L') == Symbol{'L', 1, 0});
    CHECK(make_symbol(Alphabet::bimodal, 'M').epsilon == -1);
    CHECK(make_symbol(Alphabet::bimodal, 'R').rank == 4);
    CHECK(make_symbol(Alphabet::unimodal, 'r').epsilon == -1);
    CHECK(make_symbol(Alphabet::g_factor, 'U') == Symbol{'U', -1, 6});
    CHECK(make_symbol(Alphabet::g_factor, 'C').epsilon == 0);
    CHECK(is_critical('A'));
    CHECK(is_critical('c'));
    CHECK_FALSE(is_critical('M'));
    CHECK(code_of([] { make_symbol(Alphabet::bimodal, 'C'); }) == ErrorCode::UnknownSymbol);
}

TEST_CASE("periodic words are stored by their shortest period") {
    CHECK(periodic("RMRMRM").word() == "RM");
    CHECK(periodic("RMBLMARMBLMA").word() == "RMBLMA");
    CHECK(periodic("RMR").word() == "RMR");
    CHECK(Sequence(Alphabet::bimodal, "RMRM", Periodicity::finite).word() == "RMRM");
    CHECK(periodic("RMA").at(7) == 'M');
    CHECK(code_of([] { Sequence(Alphabet::bimodal, "RM", Periodicity::finite).at(2); }) ==
          ErrorCode::ShiftOutOfRange);
}

TEST_CASE("parse errors report the offending position") {
    auto err = [](std::string_view text, Alphabet a) {
        try {
            parse_sequence(text, a, Periodicity::periodic, 3);
        } catch (const Error& e) {
            return std::make_pair(e.code(), e.position());
        }
        FAIL("no error");
        return std::make_pair(ErrorCode::UnknownSymbol, std::optional<std::size_t>{});
    };
    CHECK(err("RLX", Alphabet::bimodal) == std::make_pair(ErrorCode::UnknownSymbol, std::optional<std::size_t>{5}));
    CHECK(err("RlA", Alphabet::bimodal) == std::make_pair(ErrorCode::AlphabetMix, std::optional<std::size_t>{4}));
    CHECK(err("RCA", Alphabet::bimodal) == std::make_pair(ErrorCode::UnknownSymbol, std::optional<std::size_t>{4}));
    CHECK(err("", Alphabet::bimodal).first == ErrorCode::EmptyInput);
    CHECK(parse_sequence("rlc", Alphabet::unimodal, Periodicity::periodic).word() == "rlc");
}

TEST_CASE("conjugation is an involution that reverses the order") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = periodic(random_word(rng, 8)), b = periodic(random_word(rng, 8));
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(sign(compare(conjugate(a), conjugate(b))) == -sign(compare(a, b)));
    }
    CHECK(conjugate(periodic("RMBLMA")).word() == "LMARMB");
    CHECK(code_of([] { conjugate(Sequence(Alphabet::unimodal, "rlc", Periodicity::periodic)); }) ==
          ErrorCode::AlphabetMismatch);
}

TEST_CASE("signed order agrees with the theta weights") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = periodic(random_word(rng, 5) + (trial % 2 ? "A" : "B"));
        const auto b = periodic(random_word(rng, 5) + (trial % 3 ? "A" : "B"));
        const std::size_t h = 2 * std::lcm(a.size(), b.size());
        const auto wa = invariant_coordinate(a, h).weights(), wb = invariant_coordinate(b, h).weights();
        const auto expected = wa < wb ? -1 : (wb < wa ? 1 : 0);
        try {
            CHECK(sign(compare(a, b)) == expected);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::AmbiguousAfterCritical);
        }
    }
}

TEST_CASE("signed order is a total order on non-critical periodic words") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto a = periodic(random_word(rng, 6)), b = periodic(random_word(rng, 6)),
                   c = periodic(random_word(rng, 6));
        const int ab = sign(compare(a, b)), ba = sign(compare(b, a));
        CHECK(ab == -ba);
        CHECK((ab == 0) == (a == b));
        if (ab < 0 && sign(compare(b, c)) < 0) CHECK(sign(compare(a, c)) < 0);
    }
}

TEST_CASE("orientation flips the comparison after an M") {
    CHECK(less(periodic("RL"), periodic("RR")));
    CHECK(less(periodic("MR"), periodic("ML")));
    CHECK(less(periodic("LA"), periodic("MA")));
    CHECK(code_of([] {
              compare(Sequence(Alphabet::bimodal, "RAL", Periodicity::finite),
                      Sequence(Alphabet::bimodal, "RAR", Periodicity::finite));
          }) == ErrorCode::AmbiguousAfterCritical);
    CHECK(code_of([] { compare(periodic("RA"), Sequence(Alphabet::unimodal, "rc", Periodicity::periodic)); }) ==
          ErrorCode::AlphabetMismatch);
}

TEST_CASE("M-parity is multiplicative over concatenation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_word(rng, 7, "LAMBR"), y = random_word(rng, 7, "LAMBR");
        CHECK(m_parity(x + y) == (m_parity(x) != m_parity(y)));
    }
    CHECK(m_parity(std::string_view("RMMA")) == false);
    CHECK(m_parity(periodic("RMBLMA")) == false);
    CHECK(m_parity(std::string_view("RMLA")) == true);
}

TEST_CASE("shift rotates periodic words and truncates finite blocks") {
    CHECK(shift(periodic("RMBLMA"), 2).word() == "BLMARM");
    CHECK(shift(periodic("RMBLMA"), 8).word() == "BLMARM");
    CHECK(shift(Sequence(Alphabet::bimodal, "RMA", Periodicity::finite), 1).word() == "MA");
    CHECK(code_of([] { shift(Sequence(Alphabet::bimodal, "RMA", Periodicity::finite), 3); }) ==
          ErrorCode::ShiftOutOfRange);
}
