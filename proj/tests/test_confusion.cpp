#include <map>
#include <random>

#include "doctest.h"
#include "prayatul/confusion.hpp"
#include "testutil.hpp"

using namespace prayatul;

namespace {

LabelSequence seq(std::vector<std::string> labels) {
    return LabelSequence::from_labels(std::move(labels));
}

}  // namespace

TEST_CASE("confusion matrix of perfect predictions is diagonal") {
    const auto truth = seq({"a", "b", "a", "c"});
    const auto cm = confusion_matrix(truth, truth);
    CHECK(cm.classes == std::vector<std::string>{"a", "b", "c"});
    CHECK(cm.trace() == 4);
    CHECK(cm.total() == 4);
}

TEST_CASE("confusion matrix hand count") {
    const auto cm = confusion_matrix(seq({"a", "a", "b"}), seq({"a", "b", "b"}));
    REQUIRE(cm.classes == std::vector<std::string>{"a", "b"});
    CHECK(cm.counts[0][0] == 1);  // (a,a)
    CHECK(cm.counts[0][1] == 1);  // (a,b)
    CHECK(cm.counts[1][0] == 0);
    CHECK(cm.counts[1][1] == 1);  // (b,b)
}

TEST_CASE("class set is the union of truth and prediction tokens") {
    const auto cm = confusion_matrix(seq({"a", "a"}), seq({"a", "z"}));
    CHECK(cm.classes == std::vector<std::string>{"a", "z"});
}

TEST_CASE("binary summary") {
    const auto cm = confusion_matrix(seq({"a", "a", "b", "b"}), seq({"a", "b", "b", "b"}));
    const auto s = summarize(cm, Averaging::binary("b"));
    CHECK(s.accuracy == doctest::Approx(0.75));
    CHECK(s.precision == doctest::Approx(2.0 / 3.0));
    CHECK(s.recall == 1.0);
}

TEST_CASE("binary summary with unknown positive class") {
    const auto cm = confusion_matrix(seq({"a", "b"}), seq({"a", "b"}));
    try {
        summarize(cm, Averaging::binary("nope"));
        FAIL("expected UnknownPositiveClass");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownPositiveClass);
    }
}

TEST_CASE("perfect predictions score 1 in every mode") {
    const auto truth = seq({"a", "b", "a", "c"});
    const auto cm = confusion_matrix(truth, truth);
    for (const auto& mode : {Averaging::binary("a"), Averaging::macro(), Averaging::micro()}) {
        const auto s = summarize(cm, mode);
        CHECK(s.accuracy == 1.0);
        CHECK(s.precision == 1.0);
        CHECK(s.recall == 1.0);
    }
}

TEST_CASE("zero-support classes contribute 0 to macro means") {
    // "b" never predicted: precision(b) counts as 0, not dropped.
    const auto cm = confusion_matrix(seq({"a", "b"}), seq({"a", "a"}));
    const auto s = summarize(cm, Averaging::macro());
    CHECK(s.precision == doctest::Approx(0.25));  // (1/2 + 0) / 2
    CHECK(s.recall == doctest::Approx(0.5));      // (1 + 0) / 2
}

TEST_CASE("micro averaging equals accuracy on single-label data") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto c = testutil::random_case(rng);
        const auto s = summarize(confusion_matrix(c.truth, c.primary), Averaging::micro());
        REQUIRE(s.precision == s.accuracy);
        REQUIRE(s.recall == s.accuracy);
    }
}

TEST_CASE("macro scores are invariant under class-token renaming") {
    std::mt19937 rng(123);
    for (int i = 0; i < 200; ++i) {
        const auto c = testutil::random_case(rng);
        const auto before = summarize(confusion_matrix(c.truth, c.primary), Averaging::macro());

        const std::map<std::string, std::string> renaming = {
            {"c0", "zebra"}, {"c1", "apple"}, {"c2", "mango"}, {"c3", "kiwi"}};
        auto renamed = [&](const LabelSequence& s) {
            LabelSequence out = s;
            for (auto& label : out.labels) label = renaming.at(label);
            return out;
        };
        const auto after = summarize(
            confusion_matrix(renamed(c.truth), renamed(c.primary)), Averaging::macro());
        // Renaming reorders the class axis, so the macro sums may differ in
        // the last ulp; the values themselves are invariant.
        REQUIRE(before.accuracy == after.accuracy);
        REQUIRE(after.precision == doctest::Approx(before.precision).epsilon(1e-12));
        REQUIRE(after.recall == doctest::Approx(before.recall).epsilon(1e-12));
    }
}

TEST_CASE("summary values stay in [0, 1]") {
    std::mt19937 rng(321);
    for (int i = 0; i < 200; ++i) {
        const auto c = testutil::random_case(rng);
        for (const auto& mode : {Averaging::macro(), Averaging::micro()}) {
            const auto s = summarize(confusion_matrix(c.truth, c.primary), mode);
            for (double v : {s.accuracy, s.precision, s.recall}) {
                REQUIRE(v >= 0.0);
                REQUIRE(v <= 1.0);
            }
        }
    }
}

TEST_CASE("accuracy agrees exactly with the prayatul row margin") {
    std::mt19937 rng(456);
    for (int i = 0; i < 200; ++i) {
        const auto c = testutil::random_case(rng);
        const auto m = generate_prayatul_matrix(c.truth, c.primary, c.alternative);
        const double acc_p =
            summarize(confusion_matrix(c.truth, c.primary), Averaging::micro()).accuracy;
        const double acc_q =
            summarize(confusion_matrix(c.truth, c.alternative), Averaging::micro()).accuracy;
        const double n = static_cast<double>(m.total());
        REQUIRE(acc_p == static_cast<double>(m.br + m.rw) / n);
        REQUIRE(acc_q == static_cast<double>(m.br + m.wr) / n);
    }
}

TEST_CASE("averaging round-trips through its text form") {
    for (const auto& text : {"macro", "micro", "binary:yes"}) {
        CHECK(parse_averaging(text).to_string() == text);
    }
    CHECK_THROWS_AS(parse_averaging("binary:"), Error);
    CHECK_THROWS_AS(parse_averaging("weighted"), Error);
}

TEST_CASE("default averaging picks binary only for two-class truth") {
    CHECK(default_averaging(seq({"0", "1", "0"})).to_string() == "binary:1");
    CHECK(default_averaging(seq({"a", "b", "c"})).to_string() == "macro");
    CHECK(default_averaging(seq({"a", "a"})).to_string() == "macro");
}
