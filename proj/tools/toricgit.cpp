// Command-line front end: loads JSON inputs or built-in datasets, runs the
// exact verifications, and emits human-readable reports or machine-readable
// certificates. Exit codes: 0 = property certified, 2 = property refuted
// (with witness), 1 = input or usage error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricgit/json_io.hpp"
#include "toricgit/plane_curve.hpp"

using namespace toricgit;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  std::string verdict = "pass";  // pass | fail | error
  json certificate = json::object();
  std::vector<std::string> lines;
  // When set, the default (non --json) output is this JSON document alone,
  // so conversion results can be piped straight back in.
  bool raw_certificate = false;
};

struct Io {
  std::string input;
  std::string builtin;
  std::string out;
  bool as_json = false;
};

void add_io(CLI::App* cmd, Io& io, bool with_builtin = true) {
  cmd->add_option("--input", io.input, "JSON input file");
  if (with_builtin) cmd->add_option("--builtin", io.builtin, "built-in dataset name");
  cmd->add_flag("--json", io.as_json, "machine-readable report on stdout");
  cmd->add_option("--out", io.out, "write the report to a file");
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file \"" + path + "\"");
  return json::parse(f);
}

std::string fmt_vec(const VecZ& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).str();
  }
  return s + ")";
}

std::string fmt_weights(const WeightVector& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s;
}

std::string fmt_quotient(const CyclicQuotient& Q) {
  if (Q.order == 1) return "smooth";
  std::string s = "1/" + Q.order.str() + "(";
  for (size_t i = 0; i < Q.residues.size(); ++i) {
    if (i) s += ",";
    s += Q.residues[i].str();
  }
  return s + ")";
}

std::string fmt_monomial(const Monomial& m, const std::string& var) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string fmt_poly(const TruncPoly& p, const std::string& var) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const std::string mono = fmt_monomial(m, var);
    if (mag != 1 || mono == "1") {
      s += rat_to_string(mag);
      if (mono != "1") s += "*";
    }
    if (mono != "1") s += mono;
  }
  return s;
}

// Input resolution for fan commands: a file may hold either schema, and the
// presentation builtins convert through fan_of_cox on demand.
bool looks_like_cox(const json& j) { return j.contains("num_vars"); }

Fan load_fan(const Io& io) {
  if (!io.builtin.empty()) {
    if (is_builtin_fan(io.builtin)) return builtin_fan(io.builtin);
    if (is_builtin_cox(io.builtin)) return fan_of_cox(builtin_cox(io.builtin));
    throw std::invalid_argument("unknown builtin \"" + io.builtin + "\"");
  }
  if (io.input.empty()) throw std::invalid_argument("need --input or --builtin");
  json j = load_json_file(io.input);
  return looks_like_cox(j) ? fan_of_cox(cox_from_json(j)) : fan_from_json(j);
}

CoxPresentation load_cox(const Io& io) {
  if (!io.builtin.empty()) {
    if (is_builtin_cox(io.builtin)) return builtin_cox(io.builtin);
    if (is_builtin_fan(io.builtin)) return cox_of_fan(builtin_fan(io.builtin));
    throw std::invalid_argument("unknown builtin \"" + io.builtin + "\"");
  }
  if (io.input.empty()) throw std::invalid_argument("need --input or --builtin");
  json j = load_json_file(io.input);
  return looks_like_cox(j) ? cox_from_json(j) : cox_of_fan(fan_from_json(j));
}

int emit(Report& r, const Io& io, double elapsed_ms) {
  json envelope = {{"command", r.command}, {"inputs", r.inputs},
                   {"verdict", r.verdict}, {"certificate", r.certificate},
                   {"elapsed_ms", elapsed_ms}};
  std::string text;
  if (io.as_json) {
    text = envelope.dump(2) + "\n";
  } else if (r.raw_certificate && r.verdict == "pass") {
    text = r.certificate.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& line : r.lines) os << line << "\n";
    os << "verdict: " << r.verdict << " (" << elapsed_ms << " ms)\n";
    text = os.str();
  }
  if (!io.out.empty()) {
    std::ofstream f(io.out);
    if (!f) {
      std::cerr << "cannot write \"" << io.out << "\"\n";
      return 1;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (r.verdict == "pass") return 0;
  return r.verdict == "fail" ? 2 : 1;
}

// ---- certify-nonqp ----

Report run_certify(const Io& io, long long t, const std::string& mode_name) {
  Report r;
  r.command = "certify-nonqp";
  PolarizationMode mode =
      mode_name == "stable" ? PolarizationMode::Stable : PolarizationMode::Semistable;
  if (mode_name != "stable" && mode_name != "semistable")
    throw std::invalid_argument("--mode must be semistable or stable");

  TorusAction A;
  std::vector<OrbitClass> orbits;
  if (!io.builtin.empty()) {
    A = builtin_action(io.builtin, static_cast<Eigen::Index>(t));
    orbits = builtin_orbits(io.builtin, static_cast<Eigen::Index>(t));
    r.inputs = {{"builtin", io.builtin}, {"t", t}, {"mode", mode_name}};
  } else {
    if (io.input.empty()) throw std::invalid_argument("need --input or --builtin");
    json j = load_json_file(io.input);
    A = action_from_json(j);
    if (!j.contains("orbits"))
      throw std::invalid_argument("input must list the orbit classes under \"orbits\"");
    for (const auto& entry : j.at("orbits")) orbits.push_back(orbit_from_json(A, entry));
    r.inputs = {{"input", io.input}, {"mode", mode_name}};
  }

  try {
    NonQPCertificate cert = nonqp_certificate(A, orbits, mode);
    // Independent re-verification of every printed witness.
    for (const auto& w : cert.subset_witnesses) {
      if (exact_zero(w.chi)) throw std::logic_error("zero subset witness");
      for (size_t idx : w.subset) {
        const bool ok = mode == PolarizationMode::Stable
                            ? orbit_stable(A, orbits[idx], w.chi)
                            : orbit_semistable(A, orbits[idx], w.chi);
        if (!ok) throw std::logic_error("subset witness failed re-verification");
      }
    }
    r.certificate = certificate_to_json(A, orbits, cert);
    r.lines.push_back("no single nonzero character polarizes all " +
                      std::to_string(orbits.size()) + " orbit classes at once");
    r.lines.push_back("common cone dimension: " + std::to_string(cert.intersection_dim));
    for (const auto& w : cert.subset_witnesses) {
      std::string subset;
      for (size_t idx : w.subset) subset += (subset.empty() ? "" : ",") + std::to_string(idx + 1);
      r.lines.push_back("subset {" + subset + "}: chi = " + fmt_vec(w.chi));
    }

    SeparationReport sep = separated_pairs(A, orbits);
    r.certificate["separated_pairs"] = json::array();
    for (const auto& p : sep.pairs) {
      json entry = {{"pair", {p.i + 1, p.j + 1}}};
      if (p.chi) {
        entry["chi"] = json::array();
        for (Eigen::Index k = 0; k < p.chi->size(); ++k)
          entry["chi"].push_back((*p.chi)(k).convert_to<long long>());
        r.lines.push_back("pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                          ") separated by chi = " + fmt_vec(*p.chi));
      } else {
        entry["chi"] = nullptr;
        r.lines.push_back("pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                          ") admits no stable character: not separated");
      }
      r.certificate["separated_pairs"].push_back(entry);
    }
    r.lines.push_back(sep.all_separated ? "all pairs separated"
                                        : "separation fails for at least one pair");
  } catch (const CertificateFailure& e) {
    VecZ chi = e.chi;
    for (const auto& O : orbits) {
      const bool ok = mode == PolarizationMode::Stable ? orbit_stable(A, O, chi)
                                                       : orbit_semistable(A, O, chi);
      if (!ok) throw std::logic_error("refutation witness failed re-verification");
    }
    r.verdict = "fail";
    r.certificate = {{"witness_chi", json::array()}};
    for (Eigen::Index k = 0; k < chi.size(); ++k)
      r.certificate["witness_chi"].push_back(chi(k).convert_to<long long>());
    r.lines.push_back(std::string(e.what()));
    r.lines.push_back("witness chi = " + fmt_vec(chi));
  }
  return r;
}

// ---- fan ----

Report run_fan_check(const Io& io) {
  Report r;
  r.command = "fan check";
  r.inputs = io.builtin.empty() ? json{{"input", io.input}} : json{{"builtin", io.builtin}};
  Fan F = load_fan(io);

  FanDiagnostics diag = validate_fan(F);
  if (!diag.ok()) {
    r.verdict = "error";
    // Diagnostics refer to cones by 0-based position in max_cones, matching
    // the message text.
    r.certificate = {{"problems", json::array()}};
    for (const auto& p : diag.problems) {
      r.lines.push_back("invalid fan: " + p.what);
      json entry = {{"what", p.what}, {"cone_positions", json::array()}};
      for (size_t c : p.cones) entry["cone_positions"].push_back(c);
      r.certificate["problems"].push_back(entry);
    }
    return r;
  }

  const bool smooth = is_smooth(F);
  const bool complete = is_complete(F);
  r.lines.push_back(std::string("smooth: ") + (smooth ? "yes" : "no"));
  r.lines.push_back(std::string("complete: ") + (complete ? "yes" : "no"));
  r.certificate = {{"smooth", smooth}, {"complete", complete}};

  if (complete) {
    auto sf = projective_support_function(F);
    if (sf) {
      r.lines.push_back("projective: yes");
      json cols = json::array();
      for (Eigen::Index c = 0; c < sf->functionals.cols(); ++c) {
        json col = json::array();
        for (Eigen::Index i = 0; i < sf->functionals.rows(); ++i)
          col.push_back(rat_to_string(sf->functionals(i, c)));
        cols.push_back(col);
      }
      r.certificate["support_function"] = cols;
      r.lines.push_back("  strictly convex support function found (one functional per cone)");
    } else {
      r.lines.push_back("projective: no");
      r.certificate["support_function"] = nullptr;
    }
  } else {
    r.lines.push_back("projective: no (fan is not complete)");
    r.certificate["support_function"] = nullptr;
  }
  return r;
}

Report run_fan_to_cox(const Io& io) {
  Report r;
  r.command = "fan to-cox";
  r.inputs = io.builtin.empty() ? json{{"input", io.input}} : json{{"builtin", io.builtin}};
  Fan F = load_fan(io);
  require_valid(F);
  r.certificate = cox_to_json(cox_of_fan(F));
  r.raw_certificate = true;
  return r;
}

Report run_fan_from_cox(const Io& io) {
  Report r;
  r.command = "fan from-cox";
  r.inputs = io.builtin.empty() ? json{{"input", io.input}} : json{{"builtin", io.builtin}};
  CoxPresentation P = load_cox(io);
  r.certificate = fan_to_json(fan_of_cox(P));
  r.raw_certificate = true;
  return r;
}

// ---- blowup ----

WeightVector weights_from(const std::vector<long long>& a) {
  if (a.empty()) throw std::invalid_argument("need --a w1,w2,...");
  WeightVector w;
  for (long long v : a) w.push_back(Int(v));
  return w;
}

Report run_blowup_charts(const std::vector<long long>& a) {
  Report r;
  r.command = "blowup charts";
  WeightVector w = weights_from(a);
  r.inputs = {{"a", a}};
  std::vector<ChartDescription> ch = charts(w);
  std::vector<CyclicQuotient> types = classify_singularities(w);
  r.certificate["charts"] = json::array();
  size_t singular = 0;
  for (size_t i = 0; i < ch.size(); ++i) {
    const CyclicQuotient& Q = types[i];
    if (Q.order > 1) ++singular;
    r.lines.push_back("chart " + std::to_string(i + 1) + ": " + fmt_quotient(Q));
    json entry = {{"chart", i + 1}, {"order", Q.order.convert_to<long long>()}};
    entry["residues"] = json::array();
    for (const Int& res : Q.residues) entry["residues"].push_back(res.convert_to<long long>());
    r.certificate["charts"].push_back(entry);
  }
  r.lines.push_back(std::to_string(singular) + " singular chart(s) out of " +
                    std::to_string(ch.size()));
  return r;
}

Report run_blowup_resolve(long long d, long long t) {
  Report r;
  r.command = "blowup resolve";
  r.inputs = {{"d", d}, {"t", t}};
  ResolutionTower tower = resolution_tower(Int(d), static_cast<int>(t));
  r.certificate = tower_to_json(tower);
  r.lines.push_back("input: " + fmt_quotient(tower.input));
  for (const auto& step : tower.steps) {
    r.lines.push_back("step " + step.level.str() + ": divisor P(" +
                      fmt_weights(step.divisor_weights) + "), a = " +
                      rat_to_string(step.step_discrepancy) + ", total = " +
                      rat_to_string(step.cumulative_discrepancy) + ", residual " +
                      fmt_quotient(step.residual));
  }
  if (!tower.steps.empty())
    r.lines.push_back("a(E1, X0) = " + rat_to_string(tower.steps.front().step_discrepancy));
  return r;
}

Report run_blowup_scan(long long d, long long t, const std::string& bound_text) {
  Report r;
  r.command = "blowup scan";
  // Default window: one unit above the expected minimal discrepancy.
  Rat bound = bound_text.empty() ? Rat(Int(t - 1 + d) + Int(d), Int(d))
                                 : rat_from_string(bound_text);
  r.inputs = {{"d", d}, {"t", t}, {"bound", rat_to_string(bound)}};
  ScanResult scan = minimal_discrepancy_scan(Int(d), static_cast<int>(t), bound);
  std::string at = "(";
  json attaining = json::array();
  for (Eigen::Index i = 0; i < scan.attaining.size(); ++i) {
    if (i) at += ", ";
    at += rat_to_string(scan.attaining(i));
    attaining.push_back(rat_to_string(scan.attaining(i)));
  }
  at += ")";
  r.certificate = {{"minimum", rat_to_string(scan.minimum)},
                   {"attaining", attaining},
                   {"unique", scan.unique}};
  r.lines.push_back("minimal discrepancy " + rat_to_string(scan.minimum) + " at " + at);
  r.lines.push_back(scan.unique ? "unique minimizer among interior lattice points"
                                : "minimum attained more than once");
  return r;
}

Report run_blowup_ic_verify(long long s, long long t, long long d) {
  Report r;
  r.command = "blowup ic-verify";
  r.inputs = {{"s", s}, {"t", t}, {"d", d}};
  const bool all_pass = verify_Ic_claim(static_cast<int>(s), static_cast<int>(t), Int(d));
  r.certificate = {{"pass", all_pass}};
  r.lines.push_back(std::string("ideal generator comparison for s=") + std::to_string(s) +
                    ", t=" + std::to_string(t) + ", d=" + std::to_string(d) + ": " +
                    (all_pass ? "pass" : "fail"));
  if (!all_pass) r.verdict = "fail";
  return r;
}

// ---- curve-instability ----

Report run_curve_instability(long long dmax) {
  Report r;
  r.command = "curve-instability";
  r.inputs = {{"dmax", dmax}};
  std::vector<UnstableSmoothable> found = find_unstable_smoothable(dmax);
  r.certificate["pairs"] = json::array();
  for (const auto& u : found) {
    r.lines.push_back("d=" + std::to_string(u.d) + " m=" + std::to_string(u.m) +
                      ": min weight " + u.min_weight.str());
    r.certificate["pairs"].push_back(
        {{"d", u.d}, {"m", u.m}, {"min_weight", u.min_weight.convert_to<long long>()}});
  }
  if (found.empty()) r.lines.push_back("no qualifying (d, m) pairs up to dmax");
  return r;
}

// ---- normal-form ----

NormalForm load_normal_form(const Io& io, long long t) {
  if (!io.builtin.empty()) {
    if (io.builtin != "example30")
      throw std::invalid_argument("unknown builtin \"" + io.builtin + "\"");
    if (t < 2) throw std::invalid_argument("example30 needs t >= 2");
    // Distinguished form for the cyclic doubling pattern: h_i = x_i x_{i+1}^2.
    NormalForm nf;
    nf.s = static_cast<int>(t);
    nf.t = static_cast<int>(t);
    nf.d = 4;
    for (int i = 0; i < nf.t; ++i) {
      Monomial m(static_cast<size_t>(nf.t), 0);
      m[static_cast<size_t>(i)] += 1;
      m[static_cast<size_t>((i + 1) % nf.t)] += 2;
      nf.h.push_back(trunc_poly(nf.t, nf.d, {{m, Rat(1)}}));
    }
    return nf;
  }
  if (io.input.empty()) throw std::invalid_argument("need --input or --builtin");
  json j = load_json_file(io.input);
  if (j.contains("h")) return normal_form_from_json(j);
  GeneratorInput in = generators_from_json(j);
  return normalize(in.generators, in.d);
}

Report run_nf_normalize(const Io& io) {
  Report r;
  r.command = "normal-form normalize";
  r.inputs = io.builtin.empty() ? json{{"input", io.input}} : json{{"builtin", io.builtin}};
  if (io.input.empty()) throw std::invalid_argument("need --input");
  json j = load_json_file(io.input);
  GeneratorInput in = generators_from_json(j);
  NormalForm nf = normalize(in.generators, in.d);
  r.certificate = normal_form_to_json(nf);
  for (size_t i = 0; i < nf.h.size(); ++i)
    r.lines.push_back("h" + std::to_string(i + 1) + " = " + fmt_poly(nf.h[i], "x"));
  return r;
}

Report run_nf_stabilizer(const Io& io, long long t) {
  Report r;
  r.command = "normal-form stabilizer";
  r.inputs = io.builtin.empty() ? json{{"input", io.input}}
                                : json{{"builtin", io.builtin}, {"t", t}};
  NormalForm nf = load_normal_form(io, t);
  StabilizerLattice L = stabilizer(nf);
  r.certificate = {{"rank", static_cast<long long>(L.basis.rows())}, {"basis", json::array()}};
  for (Eigen::Index i = 0; i < L.basis.rows(); ++i) {
    json row = json::array();
    std::string line;
    for (Eigen::Index k = 0; k < L.basis.cols(); ++k) {
      row.push_back(L.basis(i, k).convert_to<long long>());
      line += (k ? ", " : "") + L.basis(i, k).str();
    }
    r.certificate["basis"].push_back(row);
    r.lines.push_back("basis row " + std::to_string(i + 1) + ": (" + line + ")");
  }
  r.lines.push_back("stabilizer lattice rank " + std::to_string(L.basis.rows()) + " inside Z^" +
                    std::to_string(nf.s + nf.t));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric GIT toolkit: polarization certificates, fans and "
               "Cox presentations, weighted blow-ups, curve instability, and "
               "torus normal forms"};
  app.require_subcommand(1);

  Io io;
  long long t = 3, s = 2, d = 4, dmax = 60;
  std::string mode_name = "semistable";
  std::string bound_text;
  std::vector<long long> a;
  std::function<Report()> run;

  auto* certify = app.add_subcommand(
      "certify-nonqp", "certify that no single character polarizes all orbit classes");
  add_io(certify, io);
  certify->add_option("--t", t, "size of the built-in cyclic action");
  certify->add_option("--mode", mode_name, "semistable (default) or stable");
  certify->callback([&] { run = [&] { return run_certify(io, t, mode_name); }; });

  auto* fan = app.add_subcommand("fan", "fan checks and Cox conversions");
  fan->require_subcommand(1);
  auto* fan_check = fan->add_subcommand("check", "validate; report smooth/complete/projective");
  add_io(fan_check, io);
  fan_check->callback([&] { run = [&] { return run_fan_check(io); }; });
  auto* fan_to_cox = fan->add_subcommand("to-cox", "quotient presentation of a fan");
  add_io(fan_to_cox, io);
  fan_to_cox->callback([&] { run = [&] { return run_fan_to_cox(io); }; });
  auto* fan_from_cox = fan->add_subcommand("from-cox", "fan of a quotient presentation");
  add_io(fan_from_cox, io);
  fan_from_cox->callback([&] { run = [&] { return run_fan_from_cox(io); }; });

  auto* blowup = app.add_subcommand("blowup", "weighted blow-up charts and towers");
  blowup->require_subcommand(1);
  auto* bl_charts = blowup->add_subcommand("charts", "chart singularity types");
  add_io(bl_charts, io, false);
  bl_charts->add_option("--a", a, "blow-up weights")->delimiter(',');
  bl_charts->callback([&] { run = [&] { return run_blowup_charts(a); }; });
  auto* bl_resolve = blowup->add_subcommand("resolve", "resolution tower of 1/d(1,...)");
  add_io(bl_resolve, io, false);
  bl_resolve->add_option("--d", d, "cyclic order");
  bl_resolve->add_option("--t", t, "number of coordinates with residue -1");
  bl_resolve->callback([&] { run = [&] { return run_blowup_resolve(d, t); }; });
  auto* bl_scan = blowup->add_subcommand("scan", "minimal discrepancy scan");
  add_io(bl_scan, io, false);
  bl_scan->add_option("--d", d, "cyclic order");
  bl_scan->add_option("--t", t, "number of coordinates with residue -1");
  bl_scan->add_option("--bound", bound_text, "coordinate-sum bound, as p/q");
  bl_scan->callback([&] { run = [&] { return run_blowup_scan(d, t, bound_text); }; });
  auto* bl_ic = blowup->add_subcommand("ic-verify", "ideal generator comparison");
  add_io(bl_ic, io, false);
  bl_ic->add_option("--s", s, "number of weight-d coordinates");
  bl_ic->add_option("--t", t, "number of weight-1 coordinates");
  bl_ic->add_option("--d", d, "largest truncation level to verify");
  bl_ic->callback([&] { run = [&] { return run_blowup_ic_verify(s, t, d); }; });

  auto* curve = app.add_subcommand("curve-instability",
                                   "unstable-but-smoothable plane curve search");
  add_io(curve, io, false);
  curve->add_option("--dmax", dmax, "largest degree to search");
  curve->callback([&] { run = [&] { return run_curve_instability(dmax); }; });

  auto* nf = app.add_subcommand("normal-form", "torus normal forms of ideal generators");
  nf->require_subcommand(1);
  auto* nf_norm = nf->add_subcommand("normalize", "eliminate to the distinguished form");
  add_io(nf_norm, io, false);
  nf_norm->callback([&] { run = [&] { return run_nf_normalize(io); }; });
  auto* nf_stab = nf->add_subcommand("stabilizer", "lattice of characters fixing the form");
  add_io(nf_stab, io);
  nf_stab->add_option("--t", t, "size of the built-in cyclic form");
  nf_stab->callback([&] { run = [&] { return run_nf_stabilizer(io, t); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = run();
  } catch (const std::exception& e) {
    report.verdict = "error";
    report.lines = {std::string("error: ") + e.what()};
    report.certificate = {{"error", e.what()}};
  }
  const auto stop = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
  return emit(report, io, ms);
}
