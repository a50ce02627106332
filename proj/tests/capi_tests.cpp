#define DOCTEST_CONFIG_IMPLEMENT
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "segdist.h"

using nlohmann::json;

namespace {

std::string g_data_dir = "tests/data";

const char* kSweepUni =
    "tower T { degree 1; tau self; dual self; gamma 0; }\n"
    "tower C { degree 2; tau self; dual -> D; }\n"
    "tower D { degree 2; tau self; dual -> C; }\n";

struct Uni {
  segdist_universe* u = nullptr;
  Uni() = default;
  Uni(Uni&& o) noexcept : u(o.u) { o.u = nullptr; }
  Uni(const Uni&) = delete;
  Uni& operator=(const Uni&) = delete;
  ~Uni() { segdist_universe_free(u); }
};

struct Ms {
  segdist_multisegment* m = nullptr;
  Ms() = default;
  Ms(Ms&& o) noexcept : m(o.m) { o.m = nullptr; }
  Ms(const Ms&) = delete;
  Ms& operator=(const Ms&) = delete;
  ~Ms() { segdist_multisegment_free(m); }
};

struct Str {
  char* s = nullptr;
  Str() = default;
  Str(Str&& o) noexcept : s(o.s) { o.s = nullptr; }
  Str(const Str&) = delete;
  Str& operator=(const Str&) = delete;
  ~Str() { segdist_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

Uni parse_uni(const char* text) {
  Uni u;
  Str err;
  REQUIRE(segdist_universe_parse(text, &u.u, &err.s) == SEGDIST_OK);
  REQUIRE(u.u != nullptr);
  return u;
}

Ms parse_ms(const Uni& u, const char* text) {
  Ms m;
  Str err;
  REQUIRE(segdist_multisegment_parse(u.u, text, &m.m, &err.s) == SEGDIST_OK);
  REQUIRE(m.m != nullptr);
  return m;
}

}  // namespace

TEST_CASE("version string is present") {
  const char* v = segdist_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v).find('.') != std::string::npos);
}

TEST_CASE("universe lifecycle and statuses") {
  SUBCASE("parse and print") {
    Uni u = parse_uni(kSweepUni);
    Str text;
    REQUIRE(segdist_universe_print(u.u, &text.s) == SEGDIST_OK);
    CHECK(text.view().find("tower T") != std::string::npos);
    CHECK(text.view().find("dual -> D") != std::string::npos);
    // Synthesized twins stay implicit.
    CHECK(text.view().find("T_chi") == std::string::npos);
  }
  SUBCASE("syntax problems map to PARSE_ERROR") {
    Uni u;
    Str err;
    CHECK(segdist_universe_parse("tower t { degre 1; }", &u.u, &err.s) ==
          SEGDIST_PARSE_ERROR);
    CHECK(u.u == nullptr);
    CHECK(err.view().find("1:11") != std::string::npos);
  }
  SUBCASE("validation problems map to SEMANTIC_ERROR") {
    Uni u;
    Str err;
    CHECK(segdist_universe_parse("tower t { degree 0; }", &u.u, &err.s) ==
          SEGDIST_SEMANTIC_ERROR);
    CHECK(u.u == nullptr);
    CHECK(!err.view().empty());
  }
  SUBCASE("null arguments map to INVALID_ARGUMENT") {
    Str err;
    CHECK(segdist_universe_parse(nullptr, nullptr, &err.s) ==
          SEGDIST_INVALID_ARGUMENT);
  }
  SUBCASE("from_file") {
    Uni u;
    Str err;
    std::string path = g_data_dir + "/intro.uni";
    REQUIRE(segdist_universe_from_file(path.c_str(), &u.u, &err.s) ==
            SEGDIST_OK);
    Str text;
    REQUIRE(segdist_universe_print(u.u, &text.s) == SEGDIST_OK);
    CHECK(text.view().find("rho2") != std::string::npos);

    Uni missing;
    Str err2;
    CHECK(segdist_universe_from_file("/nonexistent/x.uni", &missing.u,
                                     &err2.s) == SEGDIST_INVALID_ARGUMENT);
    CHECK(!err2.view().empty());
  }
  SUBCASE("free tolerates null") {
    segdist_universe_free(nullptr);
    segdist_multisegment_free(nullptr);
    segdist_string_free(nullptr);
  }
}

TEST_CASE("multisegment lifecycle and statuses") {
  Uni u = parse_uni(kSweepUni);

  SUBCASE("parse, print, round-trip") {
    Ms m = parse_ms(u, "Delta(T,0,2)+Delta(T,1,3)");
    Str text;
    REQUIRE(segdist_multisegment_print(u.u, m.m, &text.s) == SEGDIST_OK);
    CHECK(text.view() == "Delta(T,1,3)+Delta(T,0,2)");

    Ms empty = parse_ms(u, "0");
    Str zero;
    REQUIRE(segdist_multisegment_print(u.u, empty.m, &zero.s) == SEGDIST_OK);
    CHECK(zero.view() == "0");
  }
  SUBCASE("unknown tower maps to PARSE_ERROR") {
    Ms m;
    Str err;
    CHECK(segdist_multisegment_parse(u.u, "Delta(bogus,0,0)", &m.m, &err.s) ==
          SEGDIST_PARSE_ERROR);
    CHECK(m.m == nullptr);
    CHECK(err.view().find("bogus") != std::string::npos);
  }
}

TEST_CASE("classify over the C boundary") {
  Uni u;
  Str err;
  std::string path = g_data_dir + "/intro.uni";
  REQUIRE(segdist_universe_from_file(path.c_str(), &u.u, &err.s) == SEGDIST_OK);
  Ms m = parse_ms(u, "Delta(triv,0,0)+Delta(rho2,0,0)");

  SUBCASE("standard mode json") {
    Str rep;
    REQUIRE(segdist_classify(u.u, m.m, "standard", SEGDIST_FORMAT_JSON, &rep.s,
                             &err.s) == SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["mode"] == "standard");
    CHECK(j["dist"] == "NO");
    CHECK(j["eta"] == "NO");
    bool first_dir = false;
    for (const auto& e : j["trace"])
      if (e["rule"] == "FIRST-DIR") first_dir = true;
    CHECK(first_dir);
  }
  SUBCASE("auto mode picks the decisive route") {
    Uni s = parse_uni(kSweepUni);
    Ms lad = parse_ms(s, "Delta(T,0,1)+Delta(T,-1,0)");
    Str rep;
    REQUIRE(segdist_classify(s.u, lad.m, "auto", SEGDIST_FORMAT_JSON, &rep.s,
                             &err.s) == SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["mode"] == "ladder");
    CHECK(j["dist"] == "NO");
    CHECK(j["eta"] == "YES");

    // The counter-example is not a ladder, so auto falls back.
    Str rep2;
    REQUIRE(segdist_classify(u.u, m.m, "auto", SEGDIST_FORMAT_JSON, &rep2.s,
                             &err.s) == SEGDIST_OK);
    CHECK(json::parse(rep2.view())["mode"] == "standard");
  }
  SUBCASE("text format") {
    Str rep;
    REQUIRE(segdist_classify(u.u, m.m, "standard", SEGDIST_FORMAT_TEXT, &rep.s,
                             &err.s) == SEGDIST_OK);
    CHECK(rep.view().find("dist: NO") != std::string::npos);
    CHECK(rep.view().find("eta: NO") != std::string::npos);
    CHECK(rep.view().find("FIRST-DIR") != std::string::npos);
  }
  SUBCASE("segment mode needs one segment") {
    Str rep;
    Str err2;
    CHECK(segdist_classify(u.u, m.m, "segment", SEGDIST_FORMAT_JSON, &rep.s,
                           &err2.s) == SEGDIST_INVALID_ARGUMENT);
    CHECK(!err2.view().empty());
  }
  SUBCASE("ladder mode rejects non-ladders") {
    Str rep;
    Str err2;
    CHECK(segdist_classify(u.u, m.m, "ladder", SEGDIST_FORMAT_JSON, &rep.s,
                           &err2.s) == SEGDIST_INVALID_ARGUMENT);
  }
  SUBCASE("unknown mode is rejected") {
    Str rep;
    Str err2;
    CHECK(segdist_classify(u.u, m.m, "wild", SEGDIST_FORMAT_JSON, &rep.s,
                           &err2.s) == SEGDIST_INVALID_ARGUMENT);
  }
}

TEST_CASE("decompose, derivatives, strata and dual reports") {
  Uni u = parse_uni(kSweepUni);

  SUBCASE("decompose") {
    Ms m = parse_ms(u, "Delta(T,3,4)+Delta(T,2,3)+Delta(T,-3,-2)+Delta(T,-4,-3)");
    Str rep;
    Str err;
    REQUIRE(segdist_decompose(u.u, m.m, SEGDIST_FORMAT_JSON, &rep.s, &err.s) ==
            SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["components"].size() == 1);
    CHECK(j["ladder"] == true);
    CHECK(j["blocks"].size() == 2);
  }
  SUBCASE("derivatives of a ladder") {
    Ms m = parse_ms(u, "Delta(T,0,1)");
    Str rep;
    Str err;
    REQUIRE(segdist_derivatives(u.u, m.m, SEGDIST_FORMAT_JSON, &rep.s,
                                &err.s) == SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["count"] == 2);
    REQUIRE(j["members"].size() == 2);
  }
  SUBCASE("derivatives reject non-ladders") {
    Ms m = parse_ms(u, "Delta(T,0,0)+Delta(C,0,0)");
    Str rep;
    Str err;
    CHECK(segdist_derivatives(u.u, m.m, SEGDIST_FORMAT_JSON, &rep.s, &err.s) ==
          SEGDIST_INVALID_ARGUMENT);
    CHECK(err.view().find("ladder") != std::string::npos);
  }
  SUBCASE("strata") {
    Ms m = parse_ms(u, "Delta(T,-1,1)+Delta(T,-1,1)");
    Str rep;
    Str err;
    REQUIRE(segdist_strata(u.u, m.m, SEGDIST_FORMAT_JSON, &rep.s, &err.s) ==
            SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["bound"] == 2);
    CHECK(j["count"] == 4);
    int matched = 0;
    for (const auto& s : j["strata"])
      if (s["matched"] == true) ++matched;
    CHECK(matched == 2);
  }
  SUBCASE("dual") {
    Ms m = parse_ms(u, "Delta(T,0,1)+Delta(T,-1,0)");
    Str rep;
    Str err;
    REQUIRE(segdist_dual(u.u, m.m, SEGDIST_FORMAT_JSON, &rep.s, &err.s) ==
            SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["gd_closed"] == true);

    Ms open = parse_ms(u, "Delta(T,0,1)");
    Str rep2;
    REQUIRE(segdist_dual(u.u, open.m, SEGDIST_FORMAT_JSON, &rep2.s, &err.s) ==
            SEGDIST_OK);
    CHECK(json::parse(rep2.view())["gd_closed"] == false);
  }
}

TEST_CASE("checks run over the C boundary") {
  Uni u = parse_uni(kSweepUni);

  SUBCASE("key lemma, small bounds") {
    Str rep;
    Str err;
    REQUIRE(segdist_check_key_lemma(u.u, 2, 1, SEGDIST_FORMAT_JSON, &rep.s,
                                    &err.s) == SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["check"] == "key-lemma");
    CHECK(j["pass"] == true);
    CHECK(j["instances"].get<long long>() > 0);
  }
  SUBCASE("derivative corpus") {
    Str rep;
    Str err;
    REQUIRE(segdist_check_deriv(u.u, 7, 25, 3, 2, SEGDIST_FORMAT_JSON, &rep.s,
                                &err.s) == SEGDIST_OK);
    json j = json::parse(rep.view());
    CHECK(j["pass"] == true);
    CHECK(j["ladders"] == 25);
  }
  SUBCASE("bad bounds are rejected") {
    Str rep;
    Str err;
    CHECK(segdist_check_key_lemma(u.u, 0, 1, SEGDIST_FORMAT_JSON, &rep.s,
                                  &err.s) == SEGDIST_INVALID_ARGUMENT);
    CHECK(segdist_check_deriv(u.u, 7, 0, 3, 2, SEGDIST_FORMAT_JSON, &rep.s,
                              &err.s) == SEGDIST_INVALID_ARGUMENT);
  }
}

TEST_CASE("corpus generation is reproducible") {
  Uni u = parse_uni(kSweepUni);
  Str a, b, err;
  REQUIRE(segdist_corpus(u.u, 99, 20, 3, 2, SEGDIST_FORMAT_JSON, &a.s,
                         &err.s) == SEGDIST_OK);
  REQUIRE(segdist_corpus(u.u, 99, 20, 3, 2, SEGDIST_FORMAT_JSON, &b.s,
                         &err.s) == SEGDIST_OK);
  CHECK(a.view() == b.view());

  json j = json::parse(a.view());
  CHECK(j["seed"] == 99);
  CHECK(j["count"] == 20);
  CHECK(j["items"].size() == 20);

  Str c;
  REQUIRE(segdist_corpus(u.u, 100, 20, 3, 2, SEGDIST_FORMAT_JSON, &c.s,
                         &err.s) == SEGDIST_OK);
  CHECK(a.view() != c.view());
}

int main(int argc, char** argv) {
  // The harness passes the data directory as the trailing plain argument;
  // everything else belongs to the test framework.
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_data_dir = argv[argc - 1];
    --argc;
  }
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
