#include "centext/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"
#include "centext/artin_schreier.hpp"
#include "centext/error.hpp"
#include "centext/io.hpp"
#include "centext/root_data.hpp"
#include "centext/true_commutator.hpp"

namespace centext::cli {

namespace {

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();

  void check(const std::string& name, bool pass, const Json& counterexample = nullptr) {
    Json c{{"name", name}, {"verdict", pass ? "pass" : "fail"}};
    if (!pass) c["counterexample"] = counterexample.is_null() ? Json::array() : counterexample;
    checks.push_back(std::move(c));
  }
  void add(const CheckReport& r) {
    for (const auto& v : r.verdicts) check(v.name, v.pass, v.counterexample);
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["verdict"] == "pass"; });
  }
};

struct Globals {
  std::size_t max_order = Limits{}.max_group_order;
  long long deadline_ms = 0;
  std::string format = "json";
  bool timing = false;

  TrueCommutatorOptions options() const {
    TrueCommutatorOptions o;
    o.limits.max_group_order = max_order;
    if (deadline_ms > 0) o.deadline = Deadline::after_ms(deadline_ms);
    return o;
  }
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json big_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(big(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json factors(const FiniteAbelian& a) { return abelian_to_json(a); }

FiniteAbelian parse_coeffs(const std::string& text) {
  std::vector<std::int64_t> v;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    auto tok = text.substr(i, j - i);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad coefficient list: " + text);
    if (tok.size() > 7) throw InvalidInput("coefficient too large: " + tok);
    v.push_back(std::stoll(tok));
    i = j + 1;
  }
  return abelian_from_json(Json(v));
}

struct GroupInput {
  Json spec;
  GroupPtr group;
};

GroupInput load_group(const std::string& path, const Limits& limits) {
  GroupInput in;
  in.spec = read_json(path);
  in.group = group_from_json(in.spec, limits);
  return in;
}

Json invariants_of_group(const GroupPtr& g) { return factors(abelian_structure(g).abelian); }

// ---------------------------------------------------------------------------

void group_info(Report& r, const std::string& file, const Globals& gl) {
  auto in = load_group(file, gl.options().limits);
  r.inputs["group"] = in.spec;
  const auto& g = in.group;
  auto d = commutator_subgroup(g);
  r.results["order"] = g->order();
  r.results["abelian"] = g->is_abelian();
  r.results["perfect"] = d.is_whole();
  r.results["center_order"] = center(g).size();
  r.results["derived_order"] = d.size();
  r.results["abelianization"] = factors(abelianization(g).abelian);
  r.results["commutator_width"] = commutator_width(g);
  r.results["element_orders"] = order_statistics(g);
  Json bad;
  for (auto n : d.members()) {
    for (Elem x = 0; x < g->order() && bad.is_null(); ++x)
      if (!d.contains(g->conj(n, x))) bad = Json{n, x};
    if (!bad.is_null()) break;
  }
  r.check("derived_normal", bad.is_null(), bad);
}

void h2(Report& r, const std::string& file, const std::string& coeffs, const std::string& cocycle_file, bool basis,
        const Globals& gl) {
  const auto limits = gl.options().limits;
  std::optional<Cocycle2> f;
  GroupPtr g;
  FiniteAbelian a;
  if (!cocycle_file.empty()) {
    auto doc = read_json(cocycle_file);
    r.inputs["cocycle"] = doc;
    f = cocycle_from_json(doc, limits);
    g = f->group();
    a = f->coefficients();
  } else {
    if (file.empty() || coeffs.empty()) throw InvalidInput("h2 needs a group file and --coeffs, or --cocycle");
    auto in = load_group(file, limits);
    r.inputs["group"] = in.spec;
    r.inputs["coefficients"] = coeffs;
    g = in.group;
    a = parse_coeffs(coeffs);
  }
  auto h = second_cohomology(g, a, limits);
  r.results["invariant_factors"] = factors(h.invariants());
  r.results["order"] = h.order();
  Json bad;
  for (std::size_t i = 0; i < h.basis().size() && bad.is_null(); ++i)
    if (auto v = h.basis()[i].cocycle_violation()) bad = Json{i, (*v)[0], (*v)[1], (*v)[2]};
  r.check("basis_are_cocycles", bad.is_null(), bad);
  if (basis) {
    Json b = Json::array();
    for (const auto& c : h.basis()) b.push_back(cocycle_to_json(c, group_to_json(*g))["values"]);
    r.results["basis"] = b;
  }
  if (f) {
    auto v = f->cocycle_violation();
    r.check("input_is_cocycle", !v, v ? Json{(*v)[0], (*v)[1], (*v)[2]} : Json());
    if (v) return;
    Json c;
    c["class"] = h.class_of(*f);
    c["is_coboundary"] = h.is_coboundary(*f);
    c["class_order"] = h.class_order(*f);
    c["canonical"] = cocycle_to_json(h.canonical(*f), nullptr)["values"];
    r.results["cocycle"] = c;
  }
}

void schur(Report& r, const std::string& file, const Globals& gl) {
  const auto limits = gl.options().limits;
  auto in = load_group(file, limits);
  r.inputs["group"] = in.spec;
  auto m = schur_multiplier(in.group, limits);
  auto ab = abelianization(in.group).abelian;
  r.results["multiplier"] = factors(m);
  r.results["abelianization"] = factors(ab);
  // |H^2(G, Z/n)| = |Hom(G^ab, Z/n)| |Hom(H_2, Z/n)|
  const std::int64_t n = std::max<std::int64_t>(2, std::lcm(ab.exponent(), m.exponent()));
  FiniteAbelian zn(std::vector<std::int64_t>{n});
  const auto h = second_cohomology(in.group, zn, limits).order();
  const auto expect = hom_count(ab, zn) * hom_count(m, zn);
  r.results["counting_modulus"] = n;
  r.check("counting_identity", h == expect, Json{n, h, expect});
}

void restrict_cmd(Report& r, const std::string& file, const std::string& coeffs, const std::vector<Elem>& gens,
                  bool use_center, const Globals& gl) {
  const auto limits = gl.options().limits;
  auto in = load_group(file, limits);
  r.inputs["group"] = in.spec;
  r.inputs["coefficients"] = coeffs;
  for (auto x : gens)
    if (x >= in.group->order()) throw InvalidInput("subgroup generator out of range");
  Subgroup s = !gens.empty() ? generated_subgroup(in.group, gens)
               : use_center  ? center(in.group)
                             : commutator_subgroup(in.group);
  r.inputs["subgroup"] = !gens.empty() ? Json(gens) : Json(use_center ? "center" : "derived");
  auto h = second_cohomology(in.group, parse_coeffs(coeffs), limits);
  auto m = restriction_map(h, s, limits);
  r.results["subgroup_order"] = s.size();
  r.results["source"] = factors(m.source.invariants());
  r.results["target"] = factors(m.target.invariants());
  r.results["rows"] = m.rows;
  r.results["image"] = factors(m.image());
}

void xmod_check(Report& r, const std::string& file, const Globals& gl) {
  auto doc = read_json(file);
  r.inputs["xmod"] = doc;
  auto x = crossed_module_from_json(doc, gl.options().limits);
  auto rep = check_crossed_module(x.xm);
  r.add(rep);
  r.results["crossed_module"] = rep.ok();
  if (rep.ok()) {
    QuotientGroupoid q(x.xm);
    r.results["pi0_order"] = q.pi0()->order();
    r.results["pi0_abelian"] = q.pi0()->is_abelian();
    r.results["pi1"] = factors(q.pi1());
  }
  if (x.bracket) {
    StableBracket b(x.xm, *x.bracket);
    auto s = check_strictly_stable(b);
    r.add(s);
    r.results["strictly_stable"] = rep.ok() && s.ok();
  }
}

void truecomm(Report& r, const std::string& file, std::vector<std::string> p1_coeffs, const Globals& gl) {
  auto opts = gl.options();
  auto in = load_group(file, opts.limits);
  r.inputs["group"] = in.spec;
  const auto& g = in.group;
  if (p1_coeffs.empty())
    for (std::int64_t d : {2, 3, 4})
      if (g->order() % std::size_t(d) == 0) p1_coeffs.push_back(std::to_string(d));
  r.inputs["p1_coefficients"] = p1_coeffs;
  auto tc = true_commutator(g, opts);
  r.results["aun"] = factors(tc.aun());
  r.results["derived_order"] = tc.base().size();
  r.results["requires_splitting_choice"] = tc.requires_splitting_choice;
  if (!tc.cover) {
    r.results["cover_order"] = nullptr;
    r.results["cover_perfect"] = nullptr;
    r.results["p1"] = "skipped";
    r.results["p3"] = "skipped";
    r.results["pi0"] = factors(abelianization(g).abelian);
    r.results["pi1"] = nullptr;
    return;
  }
  r.results["cover_order"] = tc.cover->total->order();
  r.results["cover_perfect"] = is_perfect(tc.cover->total);
  std::vector<FiniteAbelian> cs;
  for (const auto& c : p1_coeffs) cs.push_back(parse_coeffs(c));
  auto p1 = verify_p1(g, tc, cs, opts);
  r.add(p1);
  r.results["p1"] = p1.ok() ? "pass" : "fail";
  auto p3 = verify_p3(g, tc, opts);
  r.results["p3"] = p3.found ? "found" : "exhausted";
  r.results["p3_stage"] = p3.stage;
  r.results["p3_candidates"] = p3.candidates;
  r.results["pi0"] = factors(abelianization(g).abelian);
  r.results["pi1"] = nullptr;
  if (p3.found && p3.stable) {
    r.add(p3.stable->crossed);
    r.add(p3.stable->stable);
    if (p3.stable->bracket) {
      QuotientGroupoid q(p3.stable->bracket->parent());
      r.results["pi0"] = invariants_of_group(q.pi0());
      r.results["pi1"] = factors(q.pi1());
    }
  }
}

void stacky(Report& r, const std::string& file, const Globals& gl) {
  auto opts = gl.options();
  auto in = load_group(file, opts.limits);
  r.inputs["group"] = in.spec;
  auto s = stacky_abelianization(in.group, opts);
  r.results["pi0"] = invariants_of_group(s.groupoid.pi0());
  r.results["pi1"] = factors(s.groupoid.pi1());
  r.results["aun"] = factors(s.true_commutator.aun());
  r.results["cover_order"] = s.groupoid.presentation().source()->order();
  r.add(s.checks);
}

void rootdata(Report& r, const std::string& label, const std::vector<std::string>& kernels) {
  auto [t, n] = parse_root_type(label);
  r.inputs["type"] = label;
  auto c = cartan_matrix(t, n);
  const auto m = to_int_matrix(c.entries);
  auto snf = smith_normal_form(m);
  auto pi1 = fundamental_group_ss(t, n);
  r.results["type"] = c.label();
  r.results["cartan"] = c.entries;
  r.results["invariant_factors"] = factors(pi1);
  Json diag = Json::array();
  for (const auto& d : snf.invariants) diag.push_back(big(d));
  r.results["snf"] = Json{{"diagonal", diag}, {"left", big_matrix(snf.left)}, {"right", big_matrix(snf.right)}};
  const auto det = abs(determinant(m));
  r.results["determinant"] = big(det);
  r.check("snf_certificate", multiply(multiply(snf.left, m), snf.right) == snf.diagonal);
  r.check("order_equals_determinant", BigInt(pi1.order()) == det, Json{pi1.order(), big(det)});
  if (!kernels.empty()) {
    r.inputs["kernels"] = kernels;
    std::vector<FiniteAbelian> ks;
    for (const auto& k : kernels) ks.push_back(parse_coeffs(k));
    auto rep = simply_connected_check(t, n, ks);
    Json homs = Json::array();
    for (const auto& k : rep.kernels) homs.push_back(k.homs);
    r.results["simply_connected"] = rep.simply_connected();
    r.results["hom_counts"] = homs;
    Json bad;
    for (std::size_t i = 0; i < rep.kernels.size() && bad.is_null(); ++i)
      if (rep.simply_connected() && rep.kernels[i].homs != 1) bad = Json{i};
    r.check("trivial_pi1_forces_zero_hom", rep.ok(), bad);
  }
}

Json field_json(const Fq& k) { return Json{{"p", k.p()}, {"e", k.e()}, {"modulus", k.modulus()}}; }

void as_classify(Report& r, std::uint32_t p, std::uint32_t e, std::uint32_t max_degree) {
  auto k = Fq::create(p, e);
  r.inputs["p"] = p;
  r.inputs["e"] = e;
  r.inputs["max_degree"] = max_degree;
  auto cls = classify_primitive(k, max_degree);
  Json out = Json::array();
  for (const auto& c : cls) out.push_back(format_poly(k, c.representative));
  r.results["field"] = field_json(k);
  r.results["classes"] = out;
  r.results["count"] = cls.size();
  std::vector<ASClass> expected{{}};
  for (Fq::Elt c = 1; c < k.q(); ++c) expected.push_back({{{1, c}}});
  Json bad;
  for (const auto& c : cls)
    if (std::find(expected.begin(), expected.end(), c) == expected.end()) {
      bad = Json{format_poly(k, c.representative)};
      break;
    }
  if (bad.is_null() && cls.size() != expected.size()) bad = Json{cls.size(), expected.size()};
  r.check("only_linear_classes", bad.is_null(), bad);
}

void as_char(Report& r, std::uint32_t p, std::uint32_t e, const std::string& c_text) {
  auto k = Fq::create(p, e);
  r.inputs["p"] = p;
  r.inputs["e"] = e;
  r.inputs["c"] = c_text;
  const auto c = k.parse(c_text);
  auto chi = frobenius_character(k, c);
  Json elems = Json::array();
  for (Fq::Elt g = 0; g < k.q(); ++g) elems.push_back(k.format(g));
  r.results["field"] = field_json(k);
  r.results["c"] = k.format(c);
  r.results["elements"] = elems;
  r.results["values"] = chi;
  Json bad;
  for (Fq::Elt g = 0; g < k.q() && bad.is_null(); ++g)
    if (chi[g] != k.trace(k.mul(c, g))) bad = Json{k.format(g)};
  r.check("equals_trace", bad.is_null(), bad);
}

void as_pdisc(Report& r, std::uint32_t p, std::uint32_t e) {
  auto k = Fq::create(p, e);
  r.inputs["p"] = p;
  r.inputs["e"] = e;
  auto rep = pdisc_check(k);
  r.results["field"] = field_json(k);
  r.results["characters"] = rep.characters;
  r.results["hom_order"] = rep.hom_order;
  r.results["bijective"] = rep.bijective();
  r.check("additive_in_g", rep.additive_in_g);
  r.check("additive_in_c", rep.additive_in_c);
  r.check("injective", rep.injective);
  r.check("bijective", rep.bijective(), Json{rep.characters, rep.hom_order});
}

void render_text(std::ostream& out, const std::string& prefix, const Json& j) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, v] : j.items()) render_text(out, prefix.empty() ? key : prefix + "." + key, v);
    return;
  }
  out << prefix << ": " << j.dump() << "\n";
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Central extensions, true commutators and related computations", "centext"};
  app.require_subcommand(1);
  Globals gl;
  auto globals = [&gl](CLI::App* a) {
    a->add_option("--max-order", gl.max_order, "cap on constructed group orders")->check(CLI::Range(1, 1 << 20));
    a->add_option("--deadline-ms", gl.deadline_ms, "cooperative deadline for searches")->check(CLI::NonNegativeNumber);
    a->add_option("--format", gl.format, "output format")->check(CLI::IsMember({"json", "text"}));
    a->add_flag("--timing", gl.timing, "record wall time in timing_ms");
  };
  globals(&app);

  Report report;
  std::function<void()> run;
  std::string file, coeffs, cocycle, type;
  std::vector<std::string> list;
  std::vector<Elem> gens;
  bool flag = false;
  std::uint32_t p = 2, e = 1, max_degree = 7;
  std::string c_text;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto s = parent->add_subcommand(name, desc);
    globals(s);
    return s;
  };
  auto group_arg = [&](CLI::App* s) { s->add_option("group", file, "group file, - for stdin")->required(); };

  auto group = sub(&app, "group", "group commands");
  group->require_subcommand(1);
  auto info = sub(group, "info", "structure summary of a group");
  group_arg(info);
  info->callback([&] { run = [&] { report.command = "group info"; group_info(report, file, gl); }; });

  auto h2c = sub(&app, "h2", "second cohomology with trivial coefficients");
  h2c->add_option("group", file, "group file, - for stdin");
  h2c->add_option("--coeffs", coeffs, "coefficient orders, e.g. 2,2");
  h2c->add_option("--cocycle", cocycle, "cocycle file to classify");
  h2c->add_flag("--basis", flag, "emit basis cocycles");
  h2c->callback([&] { run = [&] { report.command = "h2"; h2(report, file, coeffs, cocycle, flag, gl); }; });

  auto sc = sub(&app, "schur", "Schur multiplier");
  group_arg(sc);
  sc->callback([&] { run = [&] { report.command = "schur"; schur(report, file, gl); }; });

  auto rc = sub(&app, "restrict", "restriction of H^2 to a subgroup");
  group_arg(rc);
  rc->add_option("--coeffs", coeffs, "coefficient orders")->required();
  auto gopt = rc->add_option("--generators", gens, "subgroup generators (element indices)")->delimiter(',');
  rc->add_flag("--center", flag, "restrict to the center")->excludes(gopt);
  rc->callback([&] { run = [&] { report.command = "restrict"; restrict_cmd(report, file, coeffs, gens, flag, gl); }; });

  auto xm = sub(&app, "xmod", "crossed module commands");
  xm->require_subcommand(1);
  auto xc = sub(xm, "check", "crossed module and bracket axioms");
  xc->add_option("file", file, "crossed module file, - for stdin")->required();
  xc->callback([&] { run = [&] { report.command = "xmod check"; xmod_check(report, file, gl); }; });

  auto tc = sub(&app, "truecomm", "true commutator and its properties");
  group_arg(tc);
  tc->add_option("--p1-coeffs", list, "coefficient groups for the pullback check, e.g. 2 or 2,2");
  tc->callback([&] { run = [&] { report.command = "truecomm"; truecomm(report, file, list, gl); }; });

  auto st = sub(&app, "stacky", "stacky abelianization");
  group_arg(st);
  st->callback([&] { run = [&] { report.command = "stacky"; stacky(report, file, gl); }; });

  auto rd = sub(&app, "rootdata", "fundamental group of a simple root system");
  rd->add_option("type", type, "type and rank, e.g. A3")->required();
  rd->add_option("--kernels", list, "candidate kernels, e.g. 2 or 2,2");
  rd->callback([&] { run = [&] { report.command = "rootdata"; rootdata(report, type, list); }; });

  auto as = sub(&app, "as", "Artin-Schreier computations");
  as->require_subcommand(1);
  auto field_opts = [&](CLI::App* s) {
    s->add_option("--p", p, "characteristic")->required();
    s->add_option("--e", e, "degree")->required();
  };
  auto ac = sub(as, "classify", "primitive classes");
  field_opts(ac);
  ac->add_option("--max-degree", max_degree, "degree cap of the scan")->check(CLI::Range(1, 64));
  ac->callback([&] { run = [&] { report.command = "as classify"; as_classify(report, p, e, max_degree); }; });
  auto ach = sub(as, "char", "Frobenius character of c");
  field_opts(ach);
  ach->add_option("--c", c_text, "field element as a polynomial in t")->required();
  ach->callback([&] { run = [&] { report.command = "as char"; as_char(report, p, e, c_text); }; });
  auto ap = sub(as, "pdisc", "characters versus field elements");
  field_opts(ap);
  ap->callback([&] { run = [&] { report.command = "as pdisc"; as_pdisc(report, p, e); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  if (!run) {
    err << "error: no command\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    run();
  } catch (const DeadlineExceeded& ex) {
    report.check("deadline", false, Json{ex.what()});
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  Json doc{{"command", report.command},
           {"inputs", report.inputs},
           {"results", report.results},
           {"checks", report.checks},
           {"timing_ms", gl.timing ? ms.count() : 0}};
  if (gl.format == "text")
    render_text(out, "", doc);
  else
    out << doc.dump(2) << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace centext::cli
