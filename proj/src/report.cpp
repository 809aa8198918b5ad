#include "novikov/report.hpp"

#include "novikov/constructions.hpp"
#include "novikov/radicals.hpp"

namespace novikov {

Json element_json(const Element& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(c.to_string());
  return out;
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& b : s.basis_vectors()) rows.push_back(element_json(b));
  return {{"basis", rows}, {"dim", s.dim()}};
}

namespace {

Json optional_index(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Element require_element_arg(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.element) throw Error(ErrorCode::InvalidArgument, o.command + " needs --element");
  return parse_combo(doc, *o.element);
}

Json identity_json(const AlgebraDoc& doc, const IdentityReport& r) {
  Json out{{"holds", r.holds}};
  if (!r.holds) {
    Json tuple = Json::array();
    for (auto i : r.failing_tuple) tuple.push_back(doc.basis[i]);
    out["law"] = r.law;
    out["tuple"] = tuple;
    out["lhs"] = format_combo(doc.basis, r.lhs);
    out["rhs"] = format_combo(doc.basis, r.rhs);
  }
  return out;
}

Json step_json(const AlgebraDoc& doc, const CertificateStep& s) {
  return {{"relation", s.relation},
          {"exponent", s.exponent},
          {"level", s.level},
          {"value", format_combo(doc.basis, s.value)},
          {"target", subspace_json(s.target)},
          {"expect_member", s.expect_member},
          {"holds", s.holds}};
}

Json certificate_json(const AlgebraDoc& doc, const AlgebraTable& a, const Certificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(doc, s));
  return {{"claim", to_string(c.claim)},
          {"x", format_combo(doc.basis, c.x)},
          {"n", c.n},
          {"ideal", c.ideal ? subspace_json(*c.ideal) : Json(nullptr)},
          {"s_sequence", c.s_sequence},
          {"steps", steps},
          {"holds", c.holds},
          {"rechecked", recheck(a, c)}};
}

Json envelope(const AlgebraDoc& doc, const ReportOptions& o, std::string route, Json result) {
  return {{"command", o.command},
          {"version", std::string(kVersion)},
          {"field", doc.field.to_string()},
          {"dim", doc.basis.size()},
          {"basis", doc.basis},
          {"route", std::move(route)},
          {"result", std::move(result)}};
}

Json chain_json(const ChainReport& c) {
  Json terms = Json::array();
  Json dims = Json::array();
  for (const auto& t : c.terms) {
    terms.push_back(subspace_json(t));
    dims.push_back(t.dim());
  }
  return {{"kind", to_string(c.kind)},
          {"terms", terms},
          {"dims", dims},
          {"stabilized", c.stabilized},
          {"index", optional_index(c.index)}};
}

Json run_check(const AlgebraDoc& doc, const ReportOptions& o) {
  const AlgebraTable a = doc.table();
  Json identities;
  for (auto k : {IdentityKind::Novikov, IdentityKind::Eq1, IdentityKind::Associative,
                 IdentityKind::Commutative})
    identities[to_string(k)] = identity_json(doc, verify_identity(a, k));
  Json maps = Json::object();
  for (const auto& m : doc.maps) {
    const LinearMap d = doc.linear_map(m.name);
    maps[m.name] = {{"leibniz", identity_json(doc, verify_identity(a, IdentityKind::Leibniz, &d))}};
  }
  const Classification c = classify(a);
  Json cls{{"right_nilpotent", optional_index(c.right_nilpotent)},
           {"solvable", optional_index(c.solvable)},
           {"lie_solvable", optional_index(c.lie_solvable)},
           {"nilpotent", optional_index(c.nilpotent)}};
  return envelope(doc, o,
                  "identities checked on every basis tuple (all are multilinear); "
                  "classification indices from the right, derived, lie and full chains",
                  {{"identities", identities}, {"maps", maps}, {"classification", cls}});
}

Json run_series(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.kind) throw Error(ErrorCode::InvalidArgument, "series needs --kind");
  const auto kind = chain_kind_from_string(*o.kind);
  if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown series kind '" + *o.kind + "'");
  std::string route;
  switch (*kind) {
    case ChainKind::Right: route = "T1 = A, T(k+1) = T(k)*A"; break;
    case ChainKind::Derived: route = "T1 = A, T(k+1) = T(k)*T(k)"; break;
    case ChainKind::Lie: route = "T1 = A, T(k+1) = [T(k), T(k)]"; break;
    case ChainKind::Full:
      route = "T1 = A, T(k) = sum of T(i)*T(j) over i + j = k; stops when a term "
              "repeats over a doubling of its index";
      break;
  }
  return envelope(doc, o, route + "; index = first k with T(k) = 0",
                  chain_json(chain(doc.table(), *kind)));
}

Json run_radical(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.kind) throw Error(ErrorCode::InvalidArgument, "radical needs --kind");
  const AlgebraTable a = doc.table();
  const SamplingOptions s{o.seed, o.samples};
  RadicalReport r;
  if (*o.kind == "baer")
    r = baer_radical(a, s);
  else if (*o.kind == "lqr")
    r = lqr_radical(a, s);
  else
    throw Error(ErrorCode::InvalidArgument, "unknown radical kind '" + *o.kind + "'");
  bool all = true;
  for (const auto& w : r.witnesses) all = all && w.holds;
  return envelope(doc, o, r.route,
                  {{"kind", *o.kind},
                   {"radical", subspace_json(r.radical)},
                   {"commutator", subspace_json(r.commutator)},
                   {"equals_algebra", r.radical.dim() == a.dim()},
                   {"witnesses", {{"count", r.witnesses.size()}, {"all_hold", all}}}});
}

Json run_quasi_inverse(const AlgebraDoc& doc, const ReportOptions& o) {
  const AlgebraTable a = doc.table();
  const Element x = require_element_arg(doc, o);
  Side side;
  if (o.side == "left")
    side = Side::Left;
  else if (o.side == "right")
    side = Side::Right;
  else
    throw Error(ErrorCode::InvalidArgument, "unknown side '" + o.side + "'");
  if (o.lift && side != Side::Left)
    throw Error(ErrorCode::InvalidArgument, "--lift builds left quasi-inverses only");

  const auto y = quasiregular_solve(a, x, side);
  Json result{{"side", o.side},
              {"x", format_combo(doc.basis, x)},
              {"quasiregular", y.has_value()},
              {"y", y ? Json(format_combo(doc.basis, *y)) : Json(nullptr)}};
  std::string route = side == Side::Left ? "solve (R_x - I) y = x" : "solve (L_x - I) y = x";
  if (o.lift) {
    const auto lift = quasi_inverse_lift(a, x);
    Json l{{"succeeded", lift.has_value()}, {"agrees_with_solve", lift.has_value() == y.has_value()}};
    if (lift) {
      l["y"] = format_combo(doc.basis, lift->y);
      l["iterations"] = lift->iterations;
      l["certificate"] = certificate_json(doc, a, lift->certificate);
    }
    result["lift"] = l;
    route += "; lift: solve in A/[A,A], then y <- y + v - v*y + (v,y,y) with "
             "v = -(x + y - y*x) until v = 0";
  }
  return envelope(doc, o, route, result);
}

Json run_gd(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.derivation) throw Error(ErrorCode::InvalidArgument, "gd needs --derivation");
  const AlgebraTable b = doc.table();
  const LinearMap d = doc.linear_map(*o.derivation);
  const AlgebraTable g = gd_construct(b, d);
  AlgebraDoc out = make_doc(g);
  out.basis = doc.basis;
  Json products = Json::array();
  for (const auto& p : out.products)
    products.push_back({{"left", doc.basis[p.left]},
                        {"right", doc.basis[p.right]},
                        {"value", format_combo(doc.basis, p.value)}});
  return envelope(doc, o, "x o y = x*d(y) on the commutative associative input",
                  {{"derivation", *o.derivation},
                   {"products", products},
                   {"novikov", verify_identity(g, IdentityKind::Novikov).holds},
                   {"eq1", verify_identity(g, IdentityKind::Eq1).holds},
                   {"dsl", serialize(out)}});
}

Json run_certify(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.claim) throw Error(ErrorCode::InvalidArgument, "certify needs --claim");
  const auto claim = claim_from_string(*o.claim);
  if (!claim || (*claim != Claim::Lemma1 && *claim != Claim::Lemma3 && *claim != Claim::Theorem1))
    throw Error(ErrorCode::InvalidArgument, "unknown claim '" + *o.claim + "'");
  if (!o.n) throw Error(ErrorCode::InvalidArgument, "certify needs --n");
  const AlgebraTable a = doc.table();
  const Element x = require_element_arg(doc, o);
  std::optional<Subspace> ideal;
  if (!o.ideal.empty()) {
    std::vector<Element> gens;
    for (const auto& g : o.ideal) gens.push_back(parse_combo(doc, g));
    ideal = span_of(a, gens);
  }
  const Certificate c = bound_certificate(a, *claim, x, *o.n, ideal);
  std::string route;
  switch (*claim) {
    case Claim::Lemma1: route = "premise (x^n)^2 = (x^(n+1))^2 = 0; checks x^(2n+2) = 0"; break;
    case Claim::Lemma3: route = "premise x^n in I; checks x^(2n+2) in I^2"; break;
    default:
      route = "premise x^n in I; checks x^(s_k) in I^[k] with s_1 = n, "
              "s_k = 2 s_(k-1) + 2, until I^[k] = 0";
  }
  return envelope(doc, o, route, certificate_json(doc, a, c));
}

Json run_oracle(const AlgebraDoc& doc, const ReportOptions& o) {
  if (!o.task) throw Error(ErrorCode::InvalidArgument, "oracle needs --task");
  const AlgebraTable a = doc.table();
  const std::string base = "exhaustive enumeration over " + doc.field.to_string() + "^" +
                           std::to_string(a.dim()) + "; ";
  if (*o.task == "tower") {
    const auto t = oracle::bruteforce_baer_tower(a, o.budget);
    Json stages = Json::array();
    for (const auto& s : t.stages) stages.push_back(subspace_json(s));
    return envelope(doc, o,
                    base + "stage k+1 = preimage of the sum of all trivial ideals of A/stage k",
                    {{"task", "tower"}, {"stages", stages}, {"radical", subspace_json(t.radical)}});
  }
  if (*o.task == "nilpotents") {
    const auto ns = oracle::bruteforce_nilpotents(a, o.budget);
    Json elems = Json::array();
    for (const auto& x : ns) elems.push_back(format_combo(doc.basis, x));
    return envelope(doc, o, base + "x kept when x^(dim+1) = 0",
                    {{"task", "nilpotents"},
                     {"count", ns.size()},
                     {"elements", elems},
                     {"span", subspace_json(span_of(a, ns))}});
  }
  if (*o.task == "intersection") {
    const std::string kind = o.kind.value_or("domain");
    oracle::QuotientKind qk;
    if (kind == "domain")
      qk = oracle::QuotientKind::Domain;
    else if (kind == "field")
      qk = oracle::QuotientKind::Field;
    else
      throw Error(ErrorCode::InvalidArgument, "unknown quotient kind '" + kind + "'");
    return envelope(doc, o,
                    base + "intersection of the ideals I != A whose quotient is an integral " +
                        (qk == oracle::QuotientKind::Domain ? "domain" : "domain and a field"),
                    {{"task", "intersection"},
                     {"kind", kind},
                     {"intersection", subspace_json(oracle::quotient_intersection(a, qk, o.budget))}});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown oracle task '" + *o.task + "'");
}

void text_lines(const Json& j, const std::string& indent, std::string& out);

bool is_leaf_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string leaf(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + leaf(j[i]);
  return s + "]";
}

void text_lines(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_leaf_array(v))) {
        out += indent + k + ":\n";
        text_lines(v, indent + "  ", out);
      } else if (v.is_array()) {
        out += indent + k + ": " + inline_array(v) + "\n";
      } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        out += indent + k + ":\n";
        std::string s = v.get<std::string>();
        std::size_t start = 0;
        while (start < s.size()) {
          const std::size_t end = s.find('\n', start);
          out += indent + "  " + s.substr(start, end - start) + "\n";
          if (end == std::string::npos) break;
          start = end + 1;
        }
      } else {
        out += indent + k + ": " + leaf(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured() && !(e.is_array() && is_leaf_array(e))) {
        out += indent + "-\n";
        text_lines(e, indent + "  ", out);
      } else {
        out += indent + "- " + (e.is_array() ? inline_array(e) : leaf(e)) + "\n";
      }
    }
  } else {
    out += indent + leaf(j) + "\n";
  }
}

}  // namespace

Json run_report(const AlgebraDoc& doc, const ReportOptions& o) {
  if (o.command == "check") return run_check(doc, o);
  if (o.command == "series") return run_series(doc, o);
  if (o.command == "radical") return run_radical(doc, o);
  if (o.command == "quasi-inverse") return run_quasi_inverse(doc, o);
  if (o.command == "gd") return run_gd(doc, o);
  if (o.command == "certify") return run_certify(doc, o);
  if (o.command == "oracle") return run_oracle(doc, o);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + o.command + "'");
}

Json error_report(std::string_view command, ErrorCode code, std::string_view message) {
  return {{"command", std::string(command)},
          {"version", std::string(kVersion)},
          {"error", {{"code", std::string(error_code_name(code))}, {"message", std::string(message)}}}};
}

Json parse_error_report(std::string_view command, const ParseError& e) {
  return {{"command", std::string(command)},
          {"version", std::string(kVersion)},
          {"error",
           {{"code", "PARSE_ERROR"},
            {"message", e.detail()},
            {"line", e.pos().line},
            {"column", e.pos().column}}}};
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::string out;
  text_lines(report, "", out);
  return out;
}

}  // namespace novikov
