#include "segdist.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "segdist/dsl.hpp"
#include "segdist/engine.hpp"
#include "segdist/errors.hpp"
#include "segdist/json_io.hpp"
#include "segdist/sweep.hpp"

struct segdist_universe {
  segdist::Universe u;
};

struct segdist_multisegment {
  segdist::Multisegment m;
};

namespace {

using nlohmann::json;
using namespace segdist;

const char kVersion[] = "1.0.0";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** out_error, const std::string& msg) {
  if (out_error) *out_error = dup_string(msg);
}

template <typename Fn>
segdist_status guarded(char** out_error, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(out_error, e.what());
    return SEGDIST_PARSE_ERROR;
  } catch (const SemanticError& e) {
    set_error(out_error, e.what());
    return SEGDIST_SEMANTIC_ERROR;
  } catch (const InvalidArgument& e) {
    set_error(out_error, e.what());
    return SEGDIST_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return SEGDIST_INTERNAL_ERROR;
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string line_str(const Universe& u, const Line& l) {
  return u.tower(l.tower).id + " @ " + rat_str(l.offset);
}

std::string ladder_literal(const Universe& u, const LadderShape& l) {
  Realization segs;
  for (int i = 0; i < l.size(); ++i) segs.push_back(l.segment(i));
  return print_multisegment(u, Multisegment(u, std::move(segs)));
}

std::string eps_str(const CosetInvolution& w) {
  std::string out;
  for (int c : orbit_representatives(w)) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(c + 1);
    if (w.eps[c] != c) out += "<->" + std::to_string(w.eps[c] + 1);
    out += ")";
  }
  return out;
}

std::string refinement_str(const CosetInvolution& w) {
  std::string out;
  for (const Composition& row : w.refinement) {
    out += "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(row[j]);
    }
    out += "]";
  }
  return out;
}

void render_trace_text(std::ostringstream& os, const DistinctionReport& rep) {
  if (rep.trace.empty()) return;
  os << "trace:\n";
  for (const TraceEntry& te : rep.trace)
    os << "  " << rule_name(te.rule) << ": " << te.detail << "\n";
}

segdist_status finish(char** out_report, const std::string& text,
                      segdist_status st = SEGDIST_OK) {
  *out_report = dup_string(text);
  return st;
}

SweepBounds make_bounds(int max_segments, int max_span) {
  if (max_segments < 1) throw InvalidArgument("max_segments must be >= 1");
  if (max_span < 0) throw InvalidArgument("max_span must be >= 0");
  SweepBounds b;
  b.max_segments = max_segments;
  b.max_span = max_span;
  return b;
}

}  // namespace

extern "C" {

const char* segdist_version(void) { return kVersion; }

void segdist_string_free(char* s) { std::free(s); }

segdist_status segdist_universe_parse(const char* text,
                                      segdist_universe** out,
                                      char** out_error) {
  if (!text || !out) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(out_error, [&] {
    auto* handle = new segdist_universe{parse_universe(text)};
    *out = handle;
    return SEGDIST_OK;
  });
}

segdist_status segdist_universe_from_file(const char* path,
                                          segdist_universe** out,
                                          char** out_error) {
  if (!path || !out) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(out_error, [&] {
    std::ifstream in(path);
    if (!in)
      throw InvalidArgument(std::string("cannot read '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto* handle = new segdist_universe{parse_universe(buf.str())};
    *out = handle;
    return SEGDIST_OK;
  });
}

void segdist_universe_free(segdist_universe* u) { delete u; }

segdist_status segdist_universe_print(const segdist_universe* u,
                                      char** out_text) {
  if (!u || !out_text) return SEGDIST_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    *out_text = dup_string(print_universe(u->u));
    return SEGDIST_OK;
  });
}

segdist_status segdist_multisegment_parse(const segdist_universe* u,
                                          const char* text,
                                          segdist_multisegment** out,
                                          char** out_error) {
  if (!u || !text || !out) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(out_error, [&] {
    auto* handle = new segdist_multisegment{parse_multisegment(text, u->u)};
    *out = handle;
    return SEGDIST_OK;
  });
}

void segdist_multisegment_free(segdist_multisegment* m) { delete m; }

segdist_status segdist_multisegment_print(const segdist_universe* u,
                                          const segdist_multisegment* m,
                                          char** out_text) {
  if (!u || !m || !out_text) return SEGDIST_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    *out_text = dup_string(print_multisegment(u->u, m->m));
    return SEGDIST_OK;
  });
}

segdist_status segdist_classify(const segdist_universe* u,
                                const segdist_multisegment* m,
                                const char* mode, segdist_format format,
                                char** out_report, char** out_error) {
  if (!u || !m || !mode || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    std::string requested = mode;
    std::string used = requested;
    if (requested == "auto")
      used = ladder_shape(u->u, m->m) ? "ladder" : "standard";
    DistinctionReport rep;
    if (used == "ladder") {
      rep = classify_ladder(u->u, m->m);
    } else if (used == "standard") {
      rep = classify_standard(u->u, m->m);
    } else if (used == "segment") {
      if (m->m.size() != 1)
        throw InvalidArgument("segment mode needs exactly one segment");
      rep = classify_segment(u->u, m->m.segments()[0]);
    } else {
      throw InvalidArgument("unknown mode '" + requested + "'");
    }
    if (format == SEGDIST_FORMAT_JSON) {
      json j = report_json(rep);
      j["mode"] = used;
      j["pi"] = multisegment_json(u->u, m->m);
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    os << "mode: " << used << "\n";
    os << "pi: " << print_multisegment(u->u, m->m) << "\n";
    os << "dist: " << verdict_name(rep.dist) << "\n";
    os << "eta: " << verdict_name(rep.eta) << "\n";
    render_trace_text(os, rep);
    return finish(out_report, os.str());
  });
}

segdist_status segdist_decompose(const segdist_universe* u,
                                 const segdist_multisegment* m,
                                 segdist_format format, char** out_report,
                                 char** out_error) {
  if (!u || !m || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    auto comps = pure_components(u->u, m->m);
    auto shape = ladder_shape(u->u, m->m);
    std::vector<LadderShape> blocks;
    if (shape) blocks = proper_ladder_decomposition(u->u, *shape);
    if (format == SEGDIST_FORMAT_JSON) {
      json jcomps = json::array();
      for (const auto& [line, part] : comps)
        jcomps.push_back(json{{"line",
                               json{{"tower", u->u.tower(line.tower).id},
                                    {"offset", rat_json(line.offset)}}},
                              {"segments", multisegment_json(u->u, part)}});
      json j{{"pi", multisegment_json(u->u, m->m)},
             {"components", jcomps},
             {"ladder", shape.has_value()}};
      if (shape) {
        json jblocks = json::array();
        for (const LadderShape& b : blocks) {
          json arr = json::array();
          for (int i = 0; i < b.size(); ++i)
            arr.push_back(segment_json(u->u, b.segment(i)));
          jblocks.push_back(arr);
        }
        j["blocks"] = jblocks;
      }
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    os << "pi: " << print_multisegment(u->u, m->m) << "\n";
    os << "components: " << comps.size() << "\n";
    for (const auto& [line, part] : comps)
      os << "  [" << line_str(u->u, line) << "] "
         << print_multisegment(u->u, part) << "\n";
    os << "ladder: " << (shape ? "yes" : "no") << "\n";
    if (shape) {
      os << "blocks: " << blocks.size() << "\n";
      for (const LadderShape& b : blocks)
        os << "  " << ladder_literal(u->u, b) << "\n";
    }
    return finish(out_report, os.str());
  });
}

segdist_status segdist_derivatives(const segdist_universe* u,
                                   const segdist_multisegment* m,
                                   segdist_format format, char** out_report,
                                   char** out_error) {
  if (!u || !m || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    auto shape = ladder_shape(u->u, m->m);
    if (!shape) throw InvalidArgument("derivatives need a ladder");
    auto members = derivative_set(u->u, *shape);
    if (format == SEGDIST_FORMAT_JSON) {
      json jm = json::array();
      for (const Multisegment& d : members)
        jm.push_back(multisegment_json(u->u, d));
      json j{{"pi", multisegment_json(u->u, m->m)},
             {"count", members.size()},
             {"members", jm}};
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    os << "pi: " << print_multisegment(u->u, m->m) << "\n";
    os << "derivatives: " << members.size() << "\n";
    for (const Multisegment& d : members) {
      os << "  " << print_multisegment(u->u, d);
      if (d.empty()) os << " (empty)";
      os << "\n";
    }
    return finish(out_report, os.str());
  });
}

segdist_status segdist_strata(const segdist_universe* u,
                              const segdist_multisegment* m,
                              segdist_format format, char** out_report,
                              char** out_error) {
  if (!u || !m || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    const Realization& r = m->m.segments();
    Composition deg;
    std::optional<int> div;
    bool mixed = false;
    for (const Segment& s : r) {
      deg.push_back(degree(u->u, s));
      int dt = u->u.tower(s.tower).degree;
      if (div && *div != dt) mixed = true;
      div = dt;
    }
    if (mixed) div.reset();
    int bound = 0;
    std::vector<StratumAnalysis> table;
    for (const CosetInvolution& w : enumerate_W2(deg, div)) {
      table.push_back(stratum_hom_bound(u->u, r, w));
      bound += table.back().hom_bound;
    }
    if (format == SEGDIST_FORMAT_JSON) {
      json js = json::array();
      for (const StratumAnalysis& a : table)
        js.push_back(stratum_json(u->u, a));
      json j{{"pi", multisegment_json(u->u, m->m)},
             {"composition", deg},
             {"count", table.size()},
             {"bound", bound},
             {"strata", js}};
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    os << "pi: " << print_multisegment(u->u, m->m) << "\n";
    os << "composition:";
    for (int d : deg) os << " " << d;
    os << "\n";
    os << "strata: " << table.size() << "\n";
    os << "bound: " << bound << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      const StratumAnalysis& a = table[i];
      os << "  stratum " << i + 1 << ": refinement " << refinement_str(a.w)
         << ", eps " << eps_str(a.w) << ", hom " << a.hom_bound;
      if (!a.matched) os << ": " << a.failure_reason;
      os << "\n";
    }
    return finish(out_report, os.str());
  });
}

segdist_status segdist_dual(const segdist_universe* u,
                            const segdist_multisegment* m,
                            segdist_format format, char** out_report,
                            char** out_error) {
  if (!u || !m || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    Multisegment star = apply(u->u, m->m, MsOp::Star);
    Multisegment tau = apply(u->u, m->m, MsOp::Tau);
    Multisegment gdm = gd(u->u, m->m);
    bool closed = is_conjugate_selfdual(u->u, m->m);
    if (format == SEGDIST_FORMAT_JSON) {
      json j{{"pi", multisegment_json(u->u, m->m)},
             {"star", multisegment_json(u->u, star)},
             {"tau", multisegment_json(u->u, tau)},
             {"gd", multisegment_json(u->u, gdm)},
             {"gd_closed", closed}};
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    os << "pi: " << print_multisegment(u->u, m->m) << "\n";
    os << "star: " << print_multisegment(u->u, star) << "\n";
    os << "tau: " << print_multisegment(u->u, tau) << "\n";
    os << "gd: " << print_multisegment(u->u, gdm) << "\n";
    os << "gd-closed: " << (closed ? "yes" : "no") << "\n";
    return finish(out_report, os.str());
  });
}

segdist_status segdist_check_key_lemma(const segdist_universe* u,
                                       int max_segments, int max_span,
                                       segdist_format format,
                                       char** out_report, char** out_error) {
  if (!u || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    KeyLemmaSweepResult res =
        key_lemma_sweep(u->u, make_bounds(max_segments, max_span));
    segdist_status st = res.pass ? SEGDIST_OK : SEGDIST_FAIL;
    if (format == SEGDIST_FORMAT_JSON) {
      json j{{"check", "key-lemma"},
             {"pass", res.pass},
             {"instances", res.instances},
             {"strata", res.strata}};
      if (res.witness) {
        Multisegment wm(u->u, res.witness->first);
        j["witness"] = json{{"realization", multisegment_json(u->u, wm)},
                            {"stratum", stratum_json(u->u, res.witness->second)}};
      }
      return finish(out_report, dump(j), st);
    }
    std::ostringstream os;
    os << "check: key-lemma\n";
    os << "instances: " << res.instances << "\n";
    os << "strata: " << res.strata << "\n";
    os << "result: " << (res.pass ? "PASS" : "FAIL") << "\n";
    if (res.witness) {
      os << "witness realization: "
         << print_multisegment(u->u, Multisegment(u->u, res.witness->first))
         << "\n";
      os << "witness stratum: refinement "
         << refinement_str(res.witness->second.w) << ", eps "
         << eps_str(res.witness->second.w) << "\n";
    }
    return finish(out_report, os.str(), st);
  });
}

segdist_status segdist_check_deriv(const segdist_universe* u, uint64_t seed,
                                   int count, int max_segments, int max_span,
                                   segdist_format format, char** out_report,
                                   char** out_error) {
  if (!u || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    if (count < 1) throw InvalidArgument("count must be >= 1");
    DerivSweepResult res = deriv_corpus_check(
        u->u, seed, count, make_bounds(max_segments, max_span));
    segdist_status st = res.pass ? SEGDIST_OK : SEGDIST_FAIL;
    if (format == SEGDIST_FORMAT_JSON) {
      json j{{"check", "deriv"},
             {"pass", res.pass},
             {"ladders", res.checked},
             {"passes", res.passes},
             {"fails", res.fails},
             {"not_applicable", res.not_applicable}};
      if (res.witness)
        j["witness"] = multisegment_json(u->u, *res.witness);
      return finish(out_report, dump(j), st);
    }
    std::ostringstream os;
    os << "check: deriv\n";
    os << "ladders: " << res.checked << "\n";
    os << "passes: " << res.passes << "\n";
    os << "fails: " << res.fails << "\n";
    os << "not-applicable: " << res.not_applicable << "\n";
    os << "result: " << (res.pass ? "PASS" : "FAIL") << "\n";
    if (res.witness)
      os << "witness: " << print_multisegment(u->u, *res.witness) << "\n";
    return finish(out_report, os.str(), st);
  });
}

segdist_status segdist_corpus(const segdist_universe* u, uint64_t seed,
                              int count, int max_segments, int max_span,
                              segdist_format format, char** out_report,
                              char** out_error) {
  if (!u || !out_report) {
    set_error(out_error, "null argument");
    return SEGDIST_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded(out_error, [&] {
    if (count < 1) throw InvalidArgument("count must be >= 1");
    SweepBounds b = make_bounds(max_segments, max_span);
    if (segment_pool(u->u, b).empty())
      throw InvalidArgument("universe has no towers to sample from");
    Rng rng(seed);
    std::vector<std::string> items;
    items.reserve(count);
    for (int i = 0; i < count; ++i)
      items.push_back(
          print_multisegment(u->u, random_multisegment(u->u, rng, b)));
    if (format == SEGDIST_FORMAT_JSON) {
      json j{{"seed", seed}, {"count", count}, {"items", items}};
      return finish(out_report, dump(j));
    }
    std::ostringstream os;
    for (const std::string& s : items) os << s << "\n";
    return finish(out_report, os.str());
  });
}

}  // extern "C"
