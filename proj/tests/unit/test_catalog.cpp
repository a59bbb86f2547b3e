#include <doctest.h>

#include "potalg/catalog.hpp"
#include "potalg/errors.hpp"

using namespace potalg;

namespace {

const std::string kSkew = R"([S]
n = 3
k = 3
params = a
potential = cyc(xyz) + a*cyc(xzy)
relations = yz + a*zy ; zx + a*xz ; xy + a*yx
exceptions = a != 0
samples = a=2 ; a=5
series = (1-t)^-3
koszul = Y
pbw = Y
exact = Y
class = proper
iso = y -> z, z -> y : a = a^-1
)";

std::string with(const std::string& base, const std::string& from, const std::string& to) {
    auto s = base;
    auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
    return s;
}

void expect_schema(const std::string& text, const std::string& field) {
    try {
        parse_catalog(text);
        FAIL("expected a schema error for field " << field);
    } catch (const SchemaError& e) {
        CHECK(e.field == field);
    }
}

}  // namespace

TEST_CASE("catalog records parse") {
    auto entries = parse_catalog("# comment\n\n" + kSkew);
    REQUIRE(entries.size() == 1);
    const auto& e = entries[0];
    CHECK(e.label == "S");
    CHECK(e.n == 3);
    CHECK(e.params == std::vector<std::string>{"a"});
    CHECK(e.samples.size() == 2);
    CHECK(e.relations.size() == 3);
    CHECK(e.koszul == Flag::Yes);
    CHECK(e.properness == ProperClass::Proper);
    CHECK(e.isos.size() == 1);
    CHECK_FALSE(e.twisted);
}

TEST_CASE("schema violations name the field") {
    expect_schema(with(kSkew, "series = (1-t)^-3\n", ""), "series");
    expect_schema(with(kSkew, "koszul = Y", "koszul = maybe"), "koszul");
    expect_schema(with(kSkew, "samples = a=2 ; a=5", "samples = a=2 ; a=0"), "samples");
    expect_schema(with(kSkew, "samples = a=2 ; a=5", "samples = a=2 ; b=5"), "samples");
    expect_schema(with(kSkew, "class = proper", "class = proper\nflavour = sweet"), "flavour");
    expect_schema(with(kSkew, "class = proper", "class = proper\ntwist = 1 [3]"), "twist");
    expect_schema(with(kSkew, "class = proper", "class = proper\ngb = yz"), "gb_order");
    expect_schema(with(kSkew, "relations = yz", "relations = yw"), "relations");
    expect_schema(with(kSkew, "potential = cyc(xyz)", "potential = cyc(xy)"), "potential");
    expect_schema(kSkew + "\n" + kSkew, "label");
    CHECK_THROWS_AS(parse_catalog(with(kSkew, "k = 3", "k = 3\nk = 4")), SchemaError);
}

TEST_CASE("tuple exceptions are violated only when every component matches") {
    auto e = parse_catalog(R"([Q]
n = 2
k = 4
params = a, b
potential = x^4 + a*cyc(xxyy) + b*cyc(xyxy) + y^4
relations = x^3 + a*xyy + a*yyx + 2*b*yxy ; a*xxy + a*yxx + 2*b*xyx + y^3
exceptions = (a, b) != (1, 1/2)
samples = a=1, b=3
series = (1+t)^-1(1-t)^-3
class = proper
)")[0];
    auto q = FieldSpec::rationals();
    CHECK(sample_admissible(e, evaluate_sample({{"a", "1"}, {"b", "3"}}, q), q));
    CHECK(sample_admissible(e, evaluate_sample({{"a", "2"}, {"b", "1/2"}}, q), q));
    CHECK_FALSE(sample_admissible(e, evaluate_sample({{"a", "1"}, {"b", "1/2"}}, q), q));
}

TEST_CASE("verification of a small record") {
    auto entries = parse_catalog(kSkew);
    VerifyOptions opts;
    opts.degree = 6;
    auto reports = verify_entry(entries[0], opts);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.pass());
        for (const char* name : {"relations", "series", "oracle", "class", "exact", "koszul", "pbw", "iso"}) {
            REQUIRE(r.find(name));
            CHECK(r.find(name)->status == CheckStatus::Pass);
        }
    }

    auto wrong = parse_catalog(with(kSkew, "series = (1-t)^-3", "series = (1-t)^-4"));
    auto bad = verify_entry(wrong[0], opts);
    CHECK_FALSE(bad[0].pass());
    CHECK(bad[0].find("series")->status == CheckStatus::Fail);
}

TEST_CASE("machine output does not depend on the worker count") {
    auto entries = load_catalog(default_catalog_path());
    std::vector<CatalogEntry> some;
    for (const auto& e : entries)
        if (e.label == "P1" || e.label == "P12" || e.label == "T1" || e.label == "P23" || e.label == "T34")
            some.push_back(e);
    REQUIRE(some.size() == 5);
    VerifyOptions opts;
    opts.degree = 6;
    auto one = verify_all(some, opts, 1);
    auto three = verify_all(some, opts, 3);
    CHECK(format_machine(one) == format_machine(three));
    CHECK(one.pass());
    for (const auto& row : one.rows)
        if (row.label == "P23") {
            bool noted = false;
            for (const auto& c : row.checks) noted = noted || c.status == CheckStatus::Note;
            CHECK(noted);
        }
}
