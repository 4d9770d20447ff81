// Copyright 2026 The mixkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "mixkit/bent.hpp"
#include "mixkit/error.hpp"
#include "mixkit/group.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/search.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/time.hpp"
#include "mixkit/timefinder.hpp"

namespace mixkit::cli {

namespace {

using nlohmann::json;

// nlohmann::json keeps object keys in a std::map, so dumps are sorted and
// byte-stable.
struct Common {
  std::string group;
  std::string set;
  std::string time;
  std::string format = "table";
  bool json_flag = false;
  unsigned threads = 0;

  bool as_json() const { return json_flag || format == "json"; }
};

std::string read_text_or_file(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

json element_list(const std::vector<GroupElement>& elems) {
  json out = json::array();
  for (const auto& g : elems) out.push_back(format_element(g));
  return out;
}

json exact_json(const CycInt& z) {
  return json{{"level", z.level()}, {"coords", reduce(z)}};
}

json time_json(const Time& t) {
  if (const auto* rt = std::get_if<RationalTime>(&t)) return json{{"r", rt->r()}, {"N", rt->n()}};
  return json{{"float", std::get<FloatTime>(t).t}};
}

std::string set_text(const ConnectionSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.elements().size(); ++i) {
    if (i) out += ", ";
    out += format_element(set.elements()[i]);
  }
  return out + "}";
}

std::string poly_text(const IntPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

void add_common(CLI::App* cmd, Common& c, bool group, bool set, bool time) {
  if (group) cmd->add_option("--group,-g", c.group, "group, e.g. Z2^2xZ4")->required();
  if (set) {
    cmd->add_option("--set,-s", c.set, "connection set: a file path or inline text")
        ->required();
  }
  if (time) cmd->add_option("--time,-t", c.time, "r/N (exact) or t=<radians>")->required();
  cmd->add_option("--format", c.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_flag("--json", c.json_flag, "same as --format json");
  cmd->add_option("--threads", c.threads, "worker cap (0 = hardware)");
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// The Boolean function given by --anf or --hex.
struct FunctionInput {
  std::string anf;
  std::string hex;
  std::optional<int> arity;

  void attach(CLI::App* cmd, const std::string& prefix = "") {
    auto* a = cmd->add_option("--" + prefix + "anf", anf, "algebraic normal form, e.g. x1*x2+x3*x4");
    auto* h = cmd->add_option("--" + prefix + "hex", hex, "hex truth table, nibble i = f(4i..4i+3)");
    a->excludes(h);
    cmd->add_option("--" + prefix + "arity", arity, "number of variables");
  }
  bool given() const { return !anf.empty() || !hex.empty(); }
  BooleanFunction get() const {
    if (!anf.empty()) return parse_anf(anf, arity);
    if (!hex.empty()) return parse_truth_table_hex(hex, arity);
    throw Error(ErrorKind::kInvalidArgument, "give the function with --anf or --hex");
  }
};

int cmd_spectrum(const Common& c, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  const ConnectionSet set = parse_connection_set(read_text_or_file(c.set), group);
  const SpectrumTable table = eigenvalues(set, c.threads);
  std::optional<GcdInvariants> inv;
  if (table.integral) inv = gcd_invariants(table);
  if (c.as_json()) {
    json rows = json::array();
    for (std::int64_t i = 0; i < group.order(); ++i) {
      json row{{"g", format_element(group.element_at(i))}};
      if (table.integral) {
        row["lambda"] = table.integer_lambda[i];
      } else {
        row["lambda"] = exact_json(table.lambda[i]);
      }
      rows.push_back(std::move(row));
    }
    json doc{{"command", "spectrum"},
             {"group", group.to_string()},
             {"set", element_list(set.elements())},
             {"degree", set.degree()},
             {"integral", table.integral},
             {"eigenvalues", rows}};
    if (inv) doc["gcd_invariants"] = json{{"M", inv->m}, {"D_G", inv->d_g}};
    emit(out, doc);
    return kExitTrue;
  }
  out << "group     " << group.to_string() << '\n'
      << "set       " << set_text(set) << '\n'
      << "degree    " << set.degree() << '\n'
      << "integral  " << (table.integral ? "yes" : "no") << '\n';
  if (inv) out << "M         " << inv->m << "\nD_G       " << inv->d_g << '\n';
  for (std::int64_t i = 0; i < group.order(); ++i) {
    out << format_element(group.element_at(i)) << '\t';
    if (table.integral) {
      out << table.integer_lambda[i];
    } else {
      const auto z = to_complex(table.lambda[i]);
      out << z.real();
    }
    out << '\n';
  }
  return kExitTrue;
}

int cmd_mix(const Common& c, double tolerance, bool hadamard, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  const ConnectionSet set = parse_connection_set(read_text_or_file(c.set), group);
  const SpectrumTable table = eigenvalues(set, c.threads);
  const Time t = parse_time(c.time);
  MixOptions options;
  options.tolerance = tolerance;
  options.threads = c.threads;
  const MixReport report = is_uniform_mixing(table, t, options);
  std::optional<bool> hadamard_verdict;
  if (hadamard) hadamard_verdict = hadamard_check(table, t, options);

  std::vector<GroupElement> failing;
  for (const auto& [h, corr] : report.evidence) {
    const bool zero = corr.exact ? is_zero(*corr.exact)
                                 : std::abs(corr.approx) <
                                       tolerance * static_cast<double>(group.order());
    if (!zero) failing.push_back(h);
  }
  if (c.as_json()) {
    json evidence = json::array();
    for (const auto& [h, corr] : report.evidence) {
      json row{{"h", format_element(h)}};
      if (corr.exact) {
        row["value_exact"] = exact_json(*corr.exact);
        row["zero"] = is_zero(*corr.exact);
      } else {
        row["value_re"] = corr.approx.real();
        row["value_im"] = corr.approx.imag();
        row["zero"] = std::abs(corr.approx) < tolerance * static_cast<double>(group.order());
      }
      evidence.push_back(std::move(row));
    }
    json doc{{"command", "mix"},
             {"group", group.to_string()},
             {"set", element_list(set.elements())},
             {"time", time_json(t)},
             {"mode", to_string(report.mode)},
             {"certifying", report.certifying()},
             {"tolerance", tolerance},
             {"verdict", report.verdict},
             {"failing_h", report.failing_h ? json(format_element(*report.failing_h)) : json()},
             {"failing_shifts", element_list(failing)},
             {"evidence", evidence}};
    if (hadamard_verdict) doc["hadamard"] = *hadamard_verdict;
    emit(out, doc);
  } else {
    out << "group      " << group.to_string() << '\n'
        << "set        " << set_text(set) << '\n'
        << "time       " << format_time(t) << '\n'
        << "mode       " << to_string(report.mode) << '\n'
        << "verdict    " << (report.verdict ? "true" : "false") << '\n';
    if (report.failing_h) out << "failing_h  " << format_element(*report.failing_h) << '\n';
    if (!failing.empty()) out << "failing    " << failing.size() << " of " << group.order() - 1 << " shifts\n";
    if (hadamard_verdict) out << "hadamard   " << (*hadamard_verdict ? "true" : "false") << '\n';
  }
  return report.verdict ? kExitTrue : kExitFalse;
}

int cmd_times(const Common& c, std::optional<std::int64_t> max_n, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  const ConnectionSet set = parse_connection_set(read_text_or_file(c.set), group);
  const SpectrumTable table = eigenvalues(set, c.threads);
  const std::vector<DiffPolynomial> polys = difference_polynomials(table, c.threads);
  const CandidateTimes ct = candidate_times(table, max_n, c.threads);
  std::vector<std::string> times;
  for (const auto& t : ct.times) times.push_back(t.to_string());
  if (c.as_json()) {
    json bh = json::array();
    for (const auto& p : polys) {
      bh.push_back(json{{"h", format_element(p.h)}, {"d_h", p.d_h}, {"coeffs", p.coeffs}});
    }
    emit(out, json{{"command", "times"},
                   {"group", group.to_string()},
                   {"set", element_list(set.elements())},
                   {"a", ct.a_poly},
                   {"orders", ct.orders},
                   {"multiplicities", ct.multiplicities},
                   {"times", times},
                   {"complete_up_to", ct.complete_up_to},
                   {"residual", ct.residual},
                   {"non_exhaustive", ct.non_exhaustive},
                   {"max_n", ct.max_n},
                   {"difference_polynomials", bh}});
  } else {
    out << "a(X)            " << poly_text(ct.a_poly) << "  (constant term first)\n"
        << "orders          " << poly_text(ct.orders) << '\n'
        << "non_exhaustive  " << (ct.non_exhaustive ? "true" : "false") << '\n'
        << "complete_up_to  " << ct.complete_up_to << '\n'
        << "max_n           " << ct.max_n << '\n'
        << "times          ";
    for (const auto& t : times) out << ' ' << t;
    out << '\n';
  }
  return kExitTrue;
}

int cmd_classify(const Common& c, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  const ClassificationResult r = classify_group(group, c.threads);
  if (c.as_json()) {
    json doc{{"command", "classify"},
             {"group", group.to_string()},
             {"exponent", group.exponent()},
             {"admits", r.admits},
             {"witness", json()}};
    if (r.witness) {
      doc["witness"] = json{{"set", element_list(r.witness->set.elements())},
                            {"time", r.witness->time.to_string()},
                            {"certified", r.witness->certified}};
    }
    emit(out, doc);
  } else {
    out << "group     " << group.to_string() << '\n'
        << "exponent  " << group.exponent() << '\n'
        << "admits    " << (r.admits ? "true" : "false") << '\n';
    if (r.witness) {
      out << "witness   " << set_text(r.witness->set) << " @ " << r.witness->time.to_string()
          << (r.witness->certified ? " (certified)" : " (NOT certified)") << '\n';
    }
  }
  if (r.witness && !r.witness->certified) {
    throw Error(ErrorKind::kInternalInconsistency, "classification witness failed to certify");
  }
  return r.admits ? kExitTrue : kExitFalse;
}

int cmd_search(const Common& c, bool general, const std::vector<std::string>& time_texts,
               std::optional<std::int64_t> max_order, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  SearchOptions options;
  options.integral_only = !general;
  options.threads = c.threads;
  options.max_order = max_order;
  if (!time_texts.empty()) {
    std::vector<Time> times;
    for (const auto& t : time_texts) times.push_back(parse_time(t));
    options.times = std::move(times);
  }
  const SearchResult r = exhaustive_search(group, options);
  if (c.as_json()) {
    json hits = json::array();
    for (const auto& h : r.hits) {
      hits.push_back(json{{"set", element_list(h.set.elements())},
                          {"time", format_time(h.time)},
                          {"certified", h.certified}});
    }
    emit(out, json{{"command", "search"},
                   {"group", group.to_string()},
                   {"integral_only", r.integral_only},
                   {"sets_enumerated", r.sets_enumerated},
                   {"sets_examined", r.sets_examined},
                   {"hits", hits}});
  } else {
    out << "group            " << group.to_string() << '\n'
        << "integral_only    " << (r.integral_only ? "true" : "false") << '\n'
        << "sets_enumerated  " << r.sets_enumerated << '\n'
        << "sets_examined    " << r.sets_examined << '\n'
        << "hits             " << r.hits.size() << '\n';
    for (const auto& h : r.hits) {
      out << "  " << set_text(h.set) << " @ " << format_time(h.time)
          << (h.certified ? "" : " (float, uncertified)") << '\n';
    }
  }
  return kExitTrue;
}

int cmd_verify(const Common& c, std::int64_t order_cap, std::ostream& out) {
  const VerificationReport r = verify_classification(order_cap, c.threads);
  if (c.as_json()) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back(json{{"group", row.group.to_string()},
                          {"exponent", row.exponent},
                          {"predicted", row.predicted},
                          {"searched", row.searched},
                          {"found", row.found},
                          {"hits", row.hits},
                          {"sets_examined", row.sets_examined},
                          {"expected_sets", row.expected_sets},
                          {"witness", row.witness},
                          {"agrees", row.agrees}});
    }
    emit(out, json{{"command", "verify"},
                   {"order_cap", r.order_cap},
                   {"all_agree", r.all_agree},
                   {"rows", rows}});
  } else {
    out << r.table() << "all_agree " << (r.all_agree ? "true" : "false") << '\n';
  }
  return r.all_agree ? kExitTrue : kExitFalse;
}

int cmd_orbits(const Common& c, std::ostream& out) {
  const GroupSpec group = parse_group(c.group);
  const std::vector<Orbit> orbits = orbits_under_units(group);
  if (c.as_json()) {
    json list = json::array();
    for (const auto& o : orbits) {
      list.push_back(json{{"representative", format_element(o.representative)},
                          {"members", element_list(o.members)}});
    }
    emit(out, json{{"command", "orbits"}, {"group", group.to_string()}, {"orbits", list}});
  } else {
    for (const auto& o : orbits) {
      out << '[' << format_element(o.representative) << "]\t";
      for (std::size_t i = 0; i < o.members.size(); ++i) {
        out << (i ? " " : "") << format_element(o.members[i]);
      }
      out << '\n';
    }
  }
  return kExitTrue;
}

std::vector<std::uint32_t> parse_permutation(const std::string& text, int k) {
  std::vector<std::uint32_t> perm;
  if (text.empty()) {
    for (std::uint32_t y = 0; y < (1U << k); ++y) perm.push_back(y);
    return perm;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError(pos, "expected a permutation image");
    }
    if (used != item.size()) throw ParseError(pos + used, "expected a permutation image");
    perm.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return perm;
}

json function_json(const BooleanFunction& f) {
  return json{{"arity", f.arity()}, {"hex", to_hex(f)}, {"weight", f.weight()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform mixing of quantum walks on abelian Cayley graphs", "mixkit"};
  app.require_subcommand(1);
  Common c;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of Cay(G, S)");
  add_common(spectrum, c, true, true, false);

  double tolerance = 1e-9;
  bool hadamard = false;
  auto* mix = app.add_subcommand("mix", "decide uniform mixing at a time");
  add_common(mix, c, true, true, true);
  mix->add_option("--tolerance", tolerance, "float zero threshold, relative to |G|");
  mix->add_flag("--hadamard", hadamard, "also run the Hadamard matrix test");

  std::optional<std::int64_t> max_n;
  auto* times = app.add_subcommand("times", "candidate rational mixing times");
  add_common(times, c, true, true, false);
  times->add_option("--max-n", max_n, "largest cyclotomic order tried");

  auto* classify = app.add_subcommand("classify", "does G admit an integral mixing graph");
  add_common(classify, c, true, false, false);

  bool general = false;
  std::vector<std::string> search_times;
  std::optional<std::int64_t> max_order;
  auto* search = app.add_subcommand("search", "exhaustive search over connection sets");
  add_common(search, c, true, false, false);
  search->add_flag("--general", general, "all symmetric sets, float time grid");
  search->add_option("--times", search_times, "explicit times instead of the defaults");
  search->add_option("--max-order", max_order, "override the order cap");

  std::int64_t order_cap = 16;
  auto* verify = app.add_subcommand("verify", "check the classification against search");
  add_common(verify, c, false, false, false);
  verify->add_option("--order-cap", order_cap, "largest group order")->check(CLI::Range(1, 32));

  auto* orbits = app.add_subcommand("orbits", "orbits of G under the unit group");
  add_common(orbits, c, true, false, false);

  auto* bent = app.add_subcommand("bent", "Boolean function tools");
  bent->require_subcommand(1);
  FunctionInput fin;
  auto* b_wht = bent->add_subcommand("wht", "Walsh-Hadamard transform");
  fin.attach(b_wht);
  add_common(b_wht, c, false, false, false);
  auto* b_isbent = bent->add_subcommand("is-bent", "bentness test (exit 0 when bent)");
  fin.attach(b_isbent);
  add_common(b_isbent, c, false, false, false);
  auto* b_dual = bent->add_subcommand("dual", "dual of a bent function");
  fin.attach(b_dual);
  add_common(b_dual, c, false, false, false);
  int mm_k = 0;
  std::string mm_perm;
  FunctionInput aux;
  auto* b_mm = bent->add_subcommand("mm", "Maiorana-McFarland bent function");
  b_mm->add_option("--k", mm_k, "half arity")->required();
  b_mm->add_option("--perm", mm_perm, "images perm(0),perm(1),... (default identity)");
  aux.attach(b_mm, "aux-");
  add_common(b_mm, c, false, false, false);
  auto* b_support = bent->add_subcommand("support", "supporting set over Z2^n");
  fin.attach(b_support);
  add_common(b_support, c, false, false, false);
  auto* b_odd = bent->add_subcommand("odd-ext", "odd extension of S1 in Z2^{2m}");
  fin.attach(b_odd);
  b_odd->add_option("--group,-g", c.group, "group of S1 when given with --set");
  b_odd->add_option("--set,-s", c.set, "S1 as a set (instead of a function)");
  b_odd->add_option("--time,-t", c.time, "also decide mixing at this time");
  b_odd->add_option("--format", c.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  b_odd->add_flag("--json", c.json_flag, "same as --format json");
  b_odd->add_option("--threads", c.threads, "worker cap (0 = hardware)");
  auto* b_cubelike = bent->add_subcommand("cubelike", "certify the bent-support graph");
  fin.attach(b_cubelike);
  add_common(b_cubelike, c, false, false, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitError;
  }

  try {
    if (*spectrum) return cmd_spectrum(c, out);
    if (*mix) return cmd_mix(c, tolerance, hadamard, out);
    if (*times) return cmd_times(c, max_n, out);
    if (*classify) return cmd_classify(c, out);
    if (*search) return cmd_search(c, general, search_times, max_order, out);
    if (*verify) return cmd_verify(c, order_cap, out);
    if (*orbits) return cmd_orbits(c, out);

    if (*b_wht) {
      const BooleanFunction f = fin.get();
      const WalshSpectrum w = wht(f, c.threads);
      const std::vector<std::int64_t> lambda = eigenvalue_bridge(f, w);
      if (c.as_json()) {
        json doc{{"command", "bent wht"}, {"function", function_json(f)},
                 {"walsh", w.values}, {"eigenvalues", lambda}};
        emit(out, doc);
      } else {
        const GroupSpec cube = boolean_cube(f.arity());
        out << "g\tW_f(g)\tlambda_g\n";
        for (std::size_t g = 0; g < w.values.size(); ++g) {
          out << format_element(cube.element_at(static_cast<std::int64_t>(g))) << '\t'
              << w.values[g] << '\t' << lambda[g] << '\n';
        }
      }
      return kExitTrue;
    }
    if (*b_isbent) {
      const BooleanFunction f = fin.get();
      const bool verdict = is_bent(f);
      if (c.as_json()) {
        emit(out, json{{"command", "bent is-bent"}, {"function", function_json(f)}, {"bent", verdict}});
      } else {
        out << "bent " << (verdict ? "true" : "false") << '\n';
      }
      return verdict ? kExitTrue : kExitFalse;
    }
    if (*b_dual) {
      const BooleanFunction f = fin.get();
      const BooleanFunction d = dual(f);
      if (c.as_json()) {
        emit(out, json{{"command", "bent dual"}, {"function", function_json(f)},
                       {"dual", function_json(d)}, {"self_dual", d == f}});
      } else {
        out << "dual       " << to_hex(d) << '\n'
            << "self_dual  " << (d == f ? "true" : "false") << '\n';
      }
      return kExitTrue;
    }
    if (*b_mm) {
      if (mm_k < 1 || mm_k > kMaxBooleanArity / 2) {
        throw Error(ErrorKind::kInvalidArgument, "--k must lie in [1, 12]");
      }
      const BooleanFunction a = aux.given() ? aux.get() : BooleanFunction::zero(mm_k);
      const BooleanFunction f = maiorana_mcfarland(mm_k, parse_permutation(mm_perm, mm_k), a);
      if (c.as_json()) {
        emit(out, json{{"command", "bent mm"}, {"function", function_json(f)}, {"bent", true}});
      } else {
        out << "hex    " << to_hex(f) << '\n' << "arity  " << f.arity() << '\n';
      }
      return kExitTrue;
    }
    if (*b_support) {
      const ConnectionSet s = support(fin.get());
      if (c.as_json()) {
        emit(out, json{{"command", "bent support"}, {"group", s.group().to_string()},
                       {"set", element_list(s.elements())}});
      } else {
        out << "group  " << s.group().to_string() << '\n' << "set    " << set_text(s) << '\n';
      }
      return kExitTrue;
    }
    if (*b_odd) {
      std::optional<GroupSpec> group;
      std::vector<GroupElement> s1;
      if (fin.given()) {
        const BooleanFunction f = fin.get();
        group = boolean_cube(f.arity());
        for (std::size_t x = 0; x < f.size(); ++x) {
          if (f(x)) s1.push_back(group->element_at(static_cast<std::int64_t>(x)));
        }
      } else {
        if (c.group.empty() || c.set.empty()) {
          throw Error(ErrorKind::kInvalidArgument,
                      "odd-ext needs --anf/--hex, or --group with --set");
        }
        group = parse_group(c.group);
        s1 = parse_set_elements(read_text_or_file(c.set), *group);
      }
      const ConnectionSet s = odd_extension(*group, s1);
      std::optional<MixReport> report;
      if (!c.time.empty()) {
        MixOptions options;
        options.threads = c.threads;
        report = is_uniform_mixing(eigenvalues(s, c.threads), parse_time(c.time), options);
      }
      if (c.as_json()) {
        json doc{{"command", "bent odd-ext"}, {"group", s.group().to_string()},
                 {"set", element_list(s.elements())}};
        if (report) {
          doc["time"] = time_json(report->time);
          doc["mode"] = to_string(report->mode);
          doc["verdict"] = report->verdict;
          doc["failing_h"] = report->failing_h ? json(format_element(*report->failing_h)) : json();
        }
        emit(out, doc);
      } else {
        out << "group    " << s.group().to_string() << '\n' << "set      " << set_text(s) << '\n';
        if (report) out << "verdict  " << (report->verdict ? "true" : "false") << " at " << format_time(report->time) << '\n';
      }
      if (report) return report->verdict ? kExitTrue : kExitFalse;
      return kExitTrue;
    }
    if (*b_cubelike) {
      const CubelikeResult r = cubelike_from_bent(fin.get(), c.threads);
      if (c.as_json()) {
        emit(out, json{{"command", "bent cubelike"}, {"group", r.set.group().to_string()},
                       {"set", element_list(r.set.elements())}, {"time", r.time.to_string()},
                       {"certified", r.certified()}});
      } else {
        out << "group      " << r.set.group().to_string() << '\n'
            << "set        " << set_text(r.set) << '\n'
            << "time       " << r.time.to_string() << '\n'
            << "certified  " << (r.certified() ? "true" : "false") << '\n';
      }
      return r.certified() ? kExitTrue : kExitFalse;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace mixkit::cli
