#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dgldpc/ensemble.hpp"
#include "dgldpc/errors.hpp"
#include "dgldpc/exit.hpp"
#include "fixtures.hpp"

using namespace dgldpc;
using fixtures::ensemble;
using fixtures::generic;
using fixtures::rep;
using fixtures::spc;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string validation_message(const Ensemble& ens) {
    try {
        validate(ens);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("validation accepts well-formed ensembles") {
    const auto ens = ensemble({rep(2, 0.3), generic(fixtures::kCode32, 0.4), rep(3, 0.3)},
                              {spc(6, 0.6), generic(fixtures::kHamming74, 0.4)});
    REQUIRE(ens.variable_profiles().size() == 3);
    REQUIRE(ens.check_profiles().size() == 2);

    const auto& g32 = ens.variable_profiles()[1];
    CHECK(g32.family == NodeFamily::generic);
    CHECK(g32.generalized);
    CHECK(g32.n == 3);
    CHECK(g32.k == 2);
    CHECK(g32.d_min == 2);
    CHECK(g32.delta.delta_n2 == 3);
    CHECK(g32.delta.delta_n2_kz == std::vector<Count>{0, 2, 3});
    REQUIRE(g32.tables);
    CHECK(g32.tables->split.has_value());

    const auto& hamming = ens.check_profiles()[1];
    CHECK(hamming.d_min == 3);
    CHECK(hamming.delta.delta_n2 == 0);
    CHECK_FALSE(hamming.tables->split.has_value());

    CHECK(ens.variable_profiles()[0].delta.delta_n2_kz == std::vector<Count>{0, 1});
    CHECK(ens.check_profiles()[0].delta.delta_n2 == 15);
}

TEST_CASE("generic repetition and SPC declarations are not generalized") {
    const auto ens = ensemble({fixtures::generic_rep(2, 1.0)}, {fixtures::generic_spc(6, 1.0)});
    CHECK_FALSE(ens.variable_profiles()[0].generalized);
    CHECK_FALSE(ens.check_profiles()[0].generalized);
}

TEST_CASE("validation errors") {
    const auto msg =
        validation_message(Ensemble{{rep(3, 0.5), generic("100\n011", 0.5)}, {spc(6, 1.0)}});
    CHECK(msg.find("variable_nodes[1]") != std::string::npos);
    CHECK(msg.find("generic(3,2)") != std::string::npos);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 0.5), generic(BinaryMatrix::identity(2), 0.5)},
                                      {spc(6, 1.0)}}),
                    DimensionError);

    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 0.6)}, {spc(6, 1.0)}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 0.6), rep(2, 0.39)}, {spc(6, 1.0)}}),
                    ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0), rep(2, 0.0)}, {spc(6, 1.0)}}),
                    ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 0.5), rep(3, 0.5)}, {spc(6, 1.0)}}),
                    ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{}, {spc(6, 1.0)}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0)}, {}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{spc(3, 1.0)}, {spc(6, 1.0)}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0)}, {rep(3, 1.0)}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(1, 1.0)}, {spc(6, 1.0)}}), ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0)}, {generic("110\n110", 1.0)}}),
                    ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0)}, {generic("111\n111", 1.0)}}),
                    ValidationError);
    CHECK_THROWS_AS(validate(Ensemble{{rep(3, 1.0)}, {generic(BinaryMatrix(1, 33), 1.0)}}),
                    Error);
}

TEST_CASE("design rate") {
    CHECK(design_rate(ensemble({rep(3, 1.0)}, {spc(6, 1.0)})) == doctest::Approx(0.5));
    CHECK(design_rate(ensemble({generic(fixtures::kCode32, 1.0)}, {spc(6, 1.0)})) ==
          doctest::Approx(0.75));
    CHECK(design_rate(ensemble({rep(2, 1.0)}, {spc(4, 1.0)})) == doctest::Approx(0.5));
    CHECK(design_rate(ensemble({rep(2, 1.0)}, {spc(2, 1.0)})) == doctest::Approx(0.0));
    CHECK(design_rate(ensemble({rep(2, 1.0)}, {spc(6, 1.0)})) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("JSON parsing") {
    const auto ens = parse_ensemble(R"({
  "variable_nodes": [
    {"kind": "repetition", "length": 3, "edge_fraction": 1.0}
  ],
  "check_nodes": [
    {"kind": "generic", "generator": "101\n011", "edge_fraction": 0.5},
    {"kind": "spc", "length": 6, "edge_fraction": 0.5}
  ]
})");
    REQUIRE(ens.variable_nodes.size() == 1);
    CHECK(std::get<Repetition>(ens.variable_nodes[0].kind).length == 3);
    CHECK(std::get<GenericCode>(ens.check_nodes[0].kind).generator ==
          fixtures::matrix(fixtures::kCode32));
    CHECK(ens.check_nodes[1].edge_fraction == 0.5);
    CHECK(describe(ens.check_nodes[0].kind) == "generic(3,2)");
    CHECK(describe(ens.check_nodes[1].kind) == "spc(6)");
    CHECK(describe(ens.variable_nodes[0].kind) == "repetition(3)");
}

TEST_CASE("JSON parse errors") {
    try {
        parse_ensemble("{\n  \"variable_nodes\": [,\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_ensemble(R"({"variable_nodes":[{"kind":"turbo","length":3,"edge_fraction":1}],"check_nodes":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_ensemble(R"({"variable_nodes":[{"kind":"generic","generator":"10\n011","edge_fraction":1}],"check_nodes":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_ensemble(R"({"variable_nodes":[{"kind":"repetition","edge_fraction":1}],"check_nodes":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_ensemble(R"({"variable_nodes":[],"check_nodes":[],"extra":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_ensemble("[]"), ParseError);
}

TEST_CASE("serialization") {
    const Ensemble ens{{rep(3, 1.0)}, {spc(6, 0.5), generic(fixtures::kCode32, 0.5)}};
    const auto text = serialize_ensemble(ens);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"variable_nodes\"") < text.find("\"check_nodes\""));
    CHECK(parse_ensemble(text) == ens);
    CHECK(serialize_ensemble(parse_ensemble(text)) == text);
}

TEST_CASE("fixture files round-trip") {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(DGLDPC_TEST_DATA_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++files;
        CAPTURE(entry.path().filename().string());
        const auto first = parse_ensemble(slurp(entry.path()));
        const auto text = serialize_ensemble(first);
        const auto second = parse_ensemble(text);
        CHECK(second == first);
        CHECK(serialize_ensemble(second) == text);
        CHECK_NOTHROW(validate(first));
    }
    CHECK(files >= 10);
}

TEST_CASE("generic declarations evaluate like closed forms") {
    for (std::size_t j = 3; j <= 6; ++j) {
        const auto closed = ensemble({rep(2, 0.5), rep(3, 0.5)}, {spc(j, 1.0)});
        const auto gen = ensemble({fixtures::generic_rep(2, 0.5), rep(3, 0.5)},
                                  {fixtures::generic_spc(j, 1.0)});
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            CHECK(std::abs(exit_cnd(closed, p) - exit_cnd(gen, p)) <= 1e-12);
            CHECK(std::abs(exit_vnd(closed, p, 0.4) - exit_vnd(gen, p, 0.4)) <= 1e-12);
        }
    }
}
