#include "sextic/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "sextic/fibrations/fibrations.hpp"
#include "sextic/satake/satake.hpp"
#include "sextic/thetafn/theta.hpp"

namespace sextic::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Command, std::less<>> kCommands{
    {"igusa", Command::Igusa},       {"satake-sextic", Command::SatakeSextic}, {"phi", Command::Phi},
    {"fibration", Command::Fibration}, {"roundtrip", Command::Roundtrip},       {"theta", Command::Theta},
    {"predicates", Command::Predicates},
};

// ---- encoding ----

json encode(const Rational& r) { return to_string(r); }
json encode(const Complex& z) { return json::array({z.real(), z.imag()}); }

template <class T, std::size_t N>
json encode(const std::array<T, N>& a) {
  json out = json::array();
  for (const auto& v : a) out.push_back(encode(v));
  return out;
}

json encode(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(encode(c));
  return out;
}

json encode(const IgusaInvariants& I) {
  return {{"I2", encode(I.I2)}, {"I4", encode(I.I4)}, {"I6", encode(I.I6)}, {"I10", encode(I.I10)}};
}

json encode(const AbsoluteInvariants& j) { return {{"j1", encode(j.j1)}, {"j2", encode(j.j2)}, {"j3", encode(j.j3)}}; }

json encode(const SiegelForms& s) {
  return {{"psi4", encode(s.psi4)}, {"psi6", encode(s.psi6)}, {"chi10", encode(s.chi10)}, {"chi12", encode(s.chi12)}};
}

json encode(const DegenerationFlags& f) {
  return {{"su2_enhancement", f.su2_enhancement}, {"type_III", f.type_III}, {"so32_enhancement", f.so32_enhancement}};
}

json encode(const KodairaFiber& f) {
  json location;
  if (f.location.at_infinity) {
    location = {{"infinity", true}};
  } else if (f.location.exact) {
    location = {{"exact", encode(*f.location.exact)}};
  } else {
    location = {{"bundle", encode(f.location.bundle)}, {"numeric", encode(f.location.numeric)}};
  }
  const auto order = [](int v) -> json { return v >= kInfiniteOrder ? json("inf") : json(v); };
  return {{"type", f.type.name()},
          {"location", location},
          {"orders", json::array({order(f.orders.g2), order(f.orders.g3), order(f.orders.delta)})}};
}

// ---- decoding ----

Rational read_rational(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(ptr, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError(ptr, "not a rational: " + v.get<std::string>());
  }
}

std::vector<Rational> read_rationals(const json& doc, const std::string& key, std::size_t n,
                                     const std::string& base = "") {
  const std::string ptr = base + "/" + key;
  const json& v = doc.at(key);
  if (!v.is_array() || (n != 0 && v.size() != n)) {
    throw SchemaError(ptr, "expected an array of " + (n ? std::to_string(n) : std::string("some")) + " rationals");
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rational(v[i], ptr + "/" + std::to_string(i)));
  return out;
}

bool has(const json& doc, const char* key) { return doc.contains(key); }

RosenhainCurve read_curve(const json& doc) {
  const auto l = read_rationals(doc, "rosenhain", 3);
  RosenhainCurve c{l[0], l[1], l[2]};
  if (!c.valid()) throw DomainError("Rosenhain roots must be distinct and avoid 0, 1");
  return c;
}

SiegelForms read_siegel(const json& doc) {
  const auto s = read_rationals(doc, "siegel", 4);
  return {s[0], s[1], s[2], s[3]};
}

RationalPolynomial read_sextic(const json& doc) {
  const auto c = read_rationals(doc, "sextic", 0);
  RationalPolynomial f(c);
  if (f.degree() < 5 || f.degree() > 6) throw SchemaError("/sextic", "expected a quintic or sextic, lowest degree first");
  return f;
}

const char* const kCurveKeys = "one of \"rosenhain\", \"sextic\", \"igusa\", \"siegel\"";

IgusaInvariants read_igusa(const json& doc) {
  if (has(doc, "igusa")) {
    const auto v = read_rationals(doc, "igusa", 4);
    return {v[0], v[1], v[2], v[3]};
  }
  if (has(doc, "rosenhain")) return igusa_from_rosenhain(read_curve(doc));
  if (has(doc, "sextic")) return igusa_from_sextic(read_sextic(doc));
  if (has(doc, "siegel")) return igusa_from_siegel(read_siegel(doc));
  throw SchemaError("", std::string("input needs ") + kCurveKeys);
}

SiegelForms siegel_of(const json& doc) {
  if (has(doc, "siegel")) return read_siegel(doc);
  return siegel_from_igusa(read_igusa(doc));
}

// Claimed invariants in "expect" must be weighted-equivalent to the computed ones.
void check_expected(const json& doc, const IgusaInvariants& I) {
  if (!has(doc, "expect")) return;
  const json& e = doc.at("expect");
  if (!e.is_object() || !e.contains("igusa")) throw SchemaError("/expect", "expected {\"igusa\": [...]}");
  const auto v = read_rationals(e, "igusa", 4, "/expect");
  if (!weighted_equivalent(I, IgusaInvariants{v[0], v[1], v[2], v[3]})) {
    throw IdentityViolation("expected Igusa invariants are not weighted-equivalent to the computed ones");
  }
}

// ---- commands ----

json cmd_igusa(const json& doc) {
  const IgusaInvariants I = read_igusa(doc);
  check_expected(doc, I);
  json out{{"igusa", encode(I)}};
  if (I.I10 != 0) {
    out["absolute"] = encode(absolute_invariants(I));
    const SiegelForms s = siegel_from_igusa(I);
    out["siegel"] = encode(s);
    const auto d = q_form(s);
    out["Q"] = encode(d.Q);
    out["chi35_squared"] = encode(d.chi35_squared);
  }
  return out;
}

json cmd_satake_sextic(const json& doc) {
  PowerSums<Rational> s;
  std::optional<IgusaInvariants> I;
  if (has(doc, "power_sums")) {
    const auto v = read_rationals(doc, "power_sums", 6);
    std::copy(v.begin(), v.end(), s.s.begin());
  } else {
    I = read_igusa(doc);
    s = power_sums_from_igusa(*I);
  }
  const RationalPolynomial f = satake_sextic(s);
  if (!I) I = igusa_from_power_sums(s);
  json out{{"power_sums", encode(s.s)}, {"sextic", encode(f)}, {"igusa", encode(*I)}};
  if (I->I10 != 0) {
    const auto d = check_discriminant_identity(f, siegel_from_igusa(*I));
    out["discriminant_identity"] = {{"discriminant", encode(d.discriminant)}, {"Q", encode(d.Q)}, {"holds", d.holds}};
  }
  return out;
}

json cmd_phi(const json& doc) {
  PhiResult r;
  if (has(doc, "absolute")) {
    const auto v = read_rationals(doc, "absolute", 3);
    r = phi_map(AbsoluteInvariants{v[0], v[1], v[2]});
  } else {
    r = phi_map(read_igusa(doc));
  }
  const auto& d = r.diagnostics;
  json diag{{"chi10_relation", d.chi10_relation}, {"chi12_relation", d.chi12_relation}, {"q_relation", d.q_relation},
            {"proof_form", d.proof_form},         {"j3_forms_agree", d.j3_forms_agree}, {"N_squared", encode(d.N_squared)},
            {"Q", encode(d.Q)},                   {"Q_prime", encode(d.Q_prime)}};
  diag["N"] = d.N ? encode(*d.N) : json(nullptr);
  return {{"j_image", encode(r.j_image)},
          {"oracle", encode(r.oracle)},
          {"q", encode(r.q)},
          {"sextic", encode(r.sextic)},
          {"paths_agree", r.j_image == r.oracle},
          {"diagnostics", diag}};
}

json cmd_fibration(const json& doc) {
  if (!has(doc, "model") || !doc.at("model").is_string()) throw SchemaError("/model", "expected a model name");
  const std::string model = doc.at("model").get<std::string>();
  WeierstrassModel m;
  json out{{"model", model}};
  if (model == "kummer1") {
    if (!has(doc, "rosenhain")) throw SchemaError("/rosenhain", "kummer1 needs Rosenhain roots");
    const auto q = kummer_quartic_model(read_curve(doc));
    json quartic = json::array();
    for (const auto& c : q.coefficients) quartic.push_back(encode(c));
    out["quartic"] = quartic;
    m = quartic_jacobian(q);
  } else if (model == "kummer23") {
    m = kumfib2_model(read_igusa(doc));
  } else if (model == "alternate") {
    m = alternate_model(FibrationParams::from_igusa(read_igusa(doc)));
  } else if (model == "alternate-ftheory") {
    m = alternate_model_ftheory(siegel_of(doc));
  } else if (model == "standard") {
    m = standard_model(FibrationParams::from_igusa(read_igusa(doc)));
  } else {
    throw SchemaError("/model", "unknown model " + model);
  }
  const FiberCensus census = classify_fibers(m);
  json fibers = json::array();
  for (const auto& f : census.fibers) fibers.push_back(encode(f));
  out["A"] = encode(m.A);
  out["B"] = encode(m.B);
  out["C"] = encode(m.C);
  out["weight"] = census.weight;
  out["fibers"] = fibers;
  out["counts"] = census.counts();
  out["euler_sum"] = census.euler_sum;
  return out;
}

json cmd_roundtrip(const json& doc, const JobOptions& opt) {
  const RoundTrip r = satake_roundtrip(read_curve(doc));
  json ordering = json::array();
  for (int k : r.reconstruction.ordering) ordering.push_back(k);
  const bool ok = r.max_rel_err <= opt.tol;
  json out{{"status", ok ? "ok" : "fail"},
           {"max_rel_err", r.max_rel_err},
           {"tol", opt.tol},
           {"satake_roots", encode(r.satake_roots)},
           {"lambda", encode(r.reconstruction.lambda)},
           {"ordering", ordering},
           {"attempts", r.reconstruction.attempts},
           {"original", encode(r.original)},
           {"recovered", encode(r.recovered)}};
  return out;
}

json cmd_theta(const json& doc, const JobOptions& opt) {
  if (!has(doc, "tau")) throw SchemaError("/tau", "input needs \"tau\": [re1, im1, rez, imz, re2, im2]");
  const json& t = doc.at("tau");
  if (!t.is_array() || t.size() != 6) throw SchemaError("/tau", "expected six numbers");
  std::array<double, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!t[i].is_number()) throw SchemaError("/tau/" + std::to_string(i), "expected a number");
    v[i] = t[i].get<double>();
  }
  const theta::PeriodMatrix tau({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
  const ThetaLoop loop = theta_closed_loop(tau, opt.theta_radius, opt.tol);
  const auto& f = loop.frobenius;
  return {{"theta", encode(loop.constants.values())},
          {"precision_warning", loop.constants.precision_warning()},
          {"max_tail", loop.constants.max_tail()},
          {"frobenius",
           {{"identities", f.identities}, {"reductions", f.reductions}, {"max_identity", f.max_identity},
            {"max_reduction", f.max_reduction}, {"passed", f.passed}}},
          {"satake", encode(loop.satake.x)},
          {"power_sums", encode(loop.power_sums.s)},
          {"sum_residual", loop.sum_residual},
          {"quartic_residual", loop.quartic_residual},
          {"rosenhain", encode(loop.lambda)},
          {"rosenhain_from_fourth_powers", encode(loop.lambda4)},
          {"rescaling", {{"r2", encode(loop.fit.r2)}, {"residuals", loop.fit.residuals}, {"max_residual", loop.fit.max_residual}}}};
}

json cmd_predicates(const json& doc) {
  json out;
  if (has(doc, "fibration_params")) {
    const auto v = read_rationals(doc, "fibration_params", 5);
    const FibrationParams p{v[0], v[1], v[2], v[3], v[4]};
    out["degeneration"] = encode(degeneration_predicates(p));
    out["qvanish_bracket"] = encode(qvanish_bracket(p));
    return out;
  }
  const SiegelForms s = siegel_of(doc);
  const auto h = humbert_predicates(s);
  out["humbert"] = {{"on_H1", h.on_H1}, {"on_H4", h.on_H4}};
  out["degeneration"] = encode(degeneration_predicates(s));
  out["siegel"] = encode(s);
  out["Q"] = encode(q_polynomial(s));
  return out;
}

json dispatch(Command c, const json& doc, const JobOptions& opt) {
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  switch (c) {
    case Command::Igusa:
      return cmd_igusa(doc);
    case Command::SatakeSextic:
      return cmd_satake_sextic(doc);
    case Command::Phi:
      return cmd_phi(doc);
    case Command::Fibration:
      return cmd_fibration(doc);
    case Command::Roundtrip:
      return cmd_roundtrip(doc, opt);
    case Command::Theta:
      return cmd_theta(doc, opt);
    case Command::Predicates:
      return cmd_predicates(doc);
  }
  throw SchemaError("", "unknown command");
}

json error_doc(const char* kind, const std::string& message) {
  return {{"status", "error"}, {"kind", kind}, {"message", message}};
}

JobResult run_one(Command c, const json& doc, const JobOptions& opt, const std::string& prefix) {
  JobResult r;
  try {
    r.output = dispatch(c, doc, opt);
    if (!r.output.contains("status")) r.output["status"] = "ok";
    if (r.output["status"] != "ok") r.exit_code = kExitDomain;
  } catch (const SchemaError& e) {
    r.output = error_doc("schema", e.what());
    r.output["pointer"] = prefix + e.pointer();
    r.exit_code = kExitSchema;
  } catch (const json::exception& e) {
    r.output = error_doc("schema", e.what());
    r.output["pointer"] = prefix;
    r.exit_code = kExitSchema;
  } catch (const IdentityViolation& e) {
    r.output = error_doc("identity", e.what());
    r.exit_code = kExitIdentity;
  } catch (const NumericError& e) {
    r.output = error_doc("numeric", e.what());
    r.output["residuals"] = e.residuals();
    r.exit_code = kExitDomain;
  } catch (const DomainError& e) {
    r.output = error_doc("domain", e.what());
    r.exit_code = kExitDomain;
  }
  r.output["command"] = command_name(c);
  return r;
}

void flatten(const json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path + "/" + k, os);
  } else if (v.is_array() && !(v.size() == 2 && v[0].is_number_float())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "/" + std::to_string(i), os);
  } else {
    os << path << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  const auto it = kCommands.find(name);
  if (it == kCommands.end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [k, v] : kCommands)
    if (v == c) return k;
  return "?";
}

JobResult run(const JobSpec& job) {
  if (!(job.options.tol > 0)) {
    JobResult r{error_doc("schema", "tolerance must be positive"), kExitSchema};
    r.output["pointer"] = "/options/tol";
    return r;
  }
  if (job.options.theta_radius < 1) {
    JobResult r{error_doc("schema", "theta radius must be at least 1"), kExitSchema};
    r.output["pointer"] = "/options/theta_radius";
    return r;
  }
  if (!(job.input.is_object() && job.input.contains("jobs"))) {
    return run_one(job.command, job.input, job.options, "");
  }
  const json& jobs = job.input.at("jobs");
  if (!jobs.is_array()) {
    JobResult r{error_doc("schema", "\"jobs\" must be an array"), kExitSchema};
    r.output["pointer"] = "/jobs";
    return r;
  }
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_one(job.command, jobs[i], job.options, "/jobs/" + std::to_string(i));
    }
  };
  const std::size_t workers = std::min<std::size_t>(jobs.size(), std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  JobResult out;
  out.output = {{"command", command_name(job.command)}, {"results", json::array()}};
  for (auto& r : results) {
    if (out.exit_code == kExitOk) out.exit_code = r.exit_code;
    out.output["results"].push_back(std::move(r.output));
  }
  out.output["status"] = out.exit_code == kExitOk ? "ok" : "error";
  return out;
}

std::string dump(const nlohmann::json& doc, int indent) { return doc.dump(indent); }

std::string table(const nlohmann::json& doc) {
  std::ostringstream os;
  flatten(doc, "", os);
  return os.str();
}

}  // namespace sextic::cli
