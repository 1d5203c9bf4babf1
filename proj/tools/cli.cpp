#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "flagchow/chern.hpp"
#include "flagchow/errors.hpp"
#include "flagchow/parse.hpp"

namespace flagchow::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Literals

ChowContext parse_context(std::string_view text) {
  TextCursor c(text);
  if (c.peek() == 'P') {
    c.expect('P');
    c.expect('(');
    const unsigned m = c.unsigned_integer();
    c.expect(')');
    c.expect_end();
    return ChowContext::projective_space(m);
  }
  c.expect("Fbar");
  c.expect('(');
  const unsigned d = c.unsigned_integer();
  c.expect(',');
  const unsigned n = c.unsigned_integer();
  c.expect(')');
  c.expect_end();
  return ChowContext::incidence_flag(d, n);
}

FlagShape parse_shape(std::string_view text) {
  TextCursor c(text);
  c.expect('F');
  c.expect('(');
  std::vector<unsigned> dims;
  if (c.peek() != ';') {
    dims.push_back(c.unsigned_integer());
    while (c.consume(',')) dims.push_back(c.unsigned_integer());
  }
  c.expect(';');
  const unsigned n = c.unsigned_integer();
  c.expect(')');
  c.expect_end();
  return FlagShape(n, std::move(dims));
}

SplittingType parse_type(std::string_view text) {
  TextCursor c(text);
  c.expect('(');
  std::vector<std::int64_t> entries{c.small_integer()};
  while (c.consume(',')) entries.push_back(c.small_integer());
  c.expect(')');
  c.expect_end();
  return SplittingType(std::move(entries));
}

LineCase parse_case(std::string_view text) {
  TextCursor c(text);
  c.expect('I');
  const LineCase out = c.consume('I') ? LineCase::II : LineCase::I;
  c.expect_end();
  return out;
}

FieldChar parse_char(std::string_view text) {
  TextCursor c(text);
  const unsigned p = c.unsigned_integer();
  c.expect_end();
  return p == 0 ? FieldChar::zero() : FieldChar::positive(p);
}

std::vector<HnBlock> parse_grouping(std::string_view text) {
  TextCursor c(text);
  std::vector<HnBlock> out;
  do {
    c.expect('(');
    const long u = c.small_integer();
    c.expect(',');
    const unsigned r = c.unsigned_integer();
    c.expect(')');
    out.push_back({u, r});
  } while (c.consume(','));
  c.expect_end();
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Rendering

json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json polynomials(const std::vector<IntPolynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

json chern_json(const ChernPolynomial& p) {
  return {{"rank", p.rank()}, {"classes", polynomials(p.classes())}, {"expanded", to_string(p.expand())}};
}

std::string chern_text(const ChernPolynomial& p) {
  std::string classes;
  for (std::size_t k = 0; k < p.classes().size(); ++k) {
    if (k > 0) classes += ", ";
    classes += to_string(p.classes()[k]);
  }
  return "c = (" + classes + "), c(T) = " + to_string(p.expand());
}

json set_json(const IntegerSolutionSet& s) {
  json out{{"text", s.to_string()}};
  if (s.is_empty()) {
    out["kind"] = "empty";
  } else if (s.is_singleton()) {
    out["kind"] = "singleton";
    out["value"] = big(s.offset());
  } else {
    out["kind"] = "coset";
    out["offset"] = big(s.offset());
    out["step"] = big(s.step());
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i > 0 ? sep : "") + parts[i];
  return out;
}

struct Report {
  json parameters = json::object();
  json result = json::object();
  std::string text;
  int code = 0;
};

// A literal that failed to parse or validate, tagged with its option.
class OptionError : public std::runtime_error {
 public:
  OptionError(std::string kind, const std::string& message) : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

template <class F>
auto literal(const std::string& option, const std::string& text, F parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw OptionError("parse", option + ": " + e.what());
  } catch (const ValidationError& e) {
    throw OptionError("validation", option + ": " + e.what());
  }
}

IntPolynomial poly_literal(const std::string& option, const std::string& text) {
  return literal(option, text, [](const std::string& s) { return parse_polynomial(s); });
}

// ---------------------------------------------------------------------------
// Commands

Report do_reduce(const std::string& ctx_text, const std::string& poly_text) {
  const auto ctx = literal("--ctx", ctx_text, parse_context);
  const auto p = poly_literal("--poly", poly_text);
  const auto report = membership_report(ctx, p);
  Report r;
  r.parameters = {{"ctx", ctx.literal()}, {"poly", to_string(p)}};
  r.result["ring"] = ctx.ring_name();
  r.result["is_zero"] = report.is_zero;
  json failures = json::array();
  std::ostringstream text;
  if (report.is_zero) {
    text << "0 in " << ctx.ring_name() << "\n";
  } else {
    text << "nonzero in " << ctx.ring_name() << "\n";
    for (const auto& f : report.failures) {
      json residue = json::array();
      std::vector<std::string> mons;
      std::vector<std::string> entries;
      for (std::size_t i = 0; i < f.monomials.size(); ++i) {
        mons.push_back(to_string(IntPolynomial::term(1, f.monomials[i])));
        residue.push_back(big(f.residue[i]));
        entries.push_back(f.residue[i].get_str());
      }
      failures.push_back({{"degree", f.degree}, {"monomials", mons}, {"residue", residue}});
      text << "  degree " << f.degree << ": residue (" << join(entries, ", ") << ") over (" << join(mons, ", ")
           << ")\n";
    }
  }
  r.result["failures"] = failures;
  r.text = text.str();
  return r;
}

Report do_equal(const std::string& ctx_text, const std::string& p_text, const std::string& q_text) {
  const auto ctx = literal("--ctx", ctx_text, parse_context);
  const auto p = poly_literal("--p", p_text);
  const auto q = poly_literal("--q", q_text);
  const bool eq = chow_equal(ctx, p, q);
  Report r;
  r.parameters = {{"ctx", ctx.literal()}, {"p", to_string(p)}, {"q", to_string(q)}};
  r.result = {{"ring", ctx.ring_name()}, {"equal", eq}};
  r.text = std::string(eq ? "equal" : "not equal") + " in " + ctx.ring_name() + "\n";
  r.code = eq ? 0 : 1;
  return r;
}

Report do_hom(unsigned k, const std::string& vars_text) {
  const auto vars = literal("--vars", vars_text, [](const std::string& s) { return parse_variable_list(s); });
  const auto p = complete_homogeneous(k, vars);
  std::vector<std::string> names;
  for (auto v : vars) names.push_back(v.name());
  Report r;
  r.parameters = {{"k", k}, {"vars", names}};
  r.result = {{"polynomial", to_string(p)}, {"terms", p.size()}};
  r.text = to_string(p) + "\n";
  return r;
}

Report do_identity(unsigned d, unsigned n, long beta) {
  const auto f = quotient_shift_factorization(d, n, beta);
  Report r;
  r.parameters = {{"d", d}, {"n", n}, {"beta", beta}};
  r.result = {{"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}, {"equal", f.equal}};
  r.text = "lhs: " + to_string(f.lhs) + "\nrhs: " + to_string(f.rhs) + "\n" + (f.equal ? "equal" : "NOT equal") + "\n";
  r.code = f.equal ? 0 : 1;
  return r;
}

Report do_hnfactor(unsigned d, unsigned n, long b) {
  const auto s = hn_split_factorization(d, n, b);
  Report r;
  r.parameters = {{"d", d}, {"n", n}, {"b", b}};
  r.result = {{"sub", chern_json(s.sub)}, {"quotient", chern_json(s.quotient)}, {"verified", s.verified}};
  r.text = "sub:      " + chern_text(s.sub) + "\nquotient: " + chern_text(s.quotient) + "\n" +
           (s.verified ? "verified" : "NOT verified") + "\n";
  r.code = s.verified ? 0 : 1;
  return r;
}

Report do_lines(const std::string& shape_text) {
  const auto shape = literal("--shape", shape_text, parse_shape);
  Report r;
  r.parameters = {{"shape", shape.literal()}};
  json comps = json::array();
  std::ostringstream text;
  for (const auto& c : line_components(shape)) {
    json entry{{"index", c.index}, {"case", to_string(c.line_case)}, {"shape", c.shape.literal()}};
    entry["cotangent_rank"] = c.cotangent_rank ? json(*c.cotangent_rank) : json(nullptr);
    comps.push_back(entry);
    text << "i=" << c.index << "  Case " << to_string(c.line_case) << "  " << c.shape.literal();
    if (c.cotangent_rank) text << "  cotangent rank " << *c.cotangent_rank;
    text << "\n";
  }
  r.result = {{"components", comps}};
  r.text = text.str();
  return r;
}

Report do_gap(const std::string& type_text, const std::string& case_text) {
  const auto t = literal("--type", type_text, parse_type);
  const auto lc = literal("--case", case_text, parse_case);
  const auto g = gap_audit(t, lc);
  Report r;
  r.parameters = {{"type", t.literal()}, {"case", to_string(lc)}};
  r.result = {{"pass", g.pass}, {"witness", g.witness ? json(*g.witness) : json(nullptr)}};
  r.text = g.pass ? "Pass\n" : "Fail{j=" + std::to_string(*g.witness) + "}\n";
  r.code = g.pass ? 0 : 1;
  return r;
}

Report do_slope(const std::string& type_text) {
  const auto t = literal("--type", type_text, parse_type);
  const mpq_class s = slope(t);
  Report r;
  r.parameters = {{"type", t.literal()}};
  r.result = {{"slope", s.get_str()}, {"numerator", big(s.get_num())}, {"denominator", big(s.get_den())}};
  r.text = s.get_str() + "\n";
  return r;
}

Report do_classify(unsigned d, unsigned n, unsigned rank, const std::string& type_text, const std::string& ch_text) {
  const auto t = literal("--type", type_text, parse_type);
  const auto ch = literal("--char", ch_text, parse_char);
  const auto v = classify_uniform(d, n, rank, t, ch);
  Report r;
  r.parameters = {{"d", d}, {"n", n}, {"r", rank}, {"type", t.literal()}, {"char", ch.p()}};
  std::vector<std::string> names;
  for (const auto& p : v.possibilities) names.push_back(p.to_string());
  r.result = {{"possibilities", names}, {"notes", v.notes}, {"normalized", v.normalized.literal()}};
  std::ostringstream text;
  text << "normalized type " << v.normalized.literal() << "\n";
  for (const auto& name : names) text << "  " << name << "\n";
  for (const auto& note : v.notes) text << "note: " << note << "\n";
  r.text = text.str();
  return r;
}

Report do_enumerate(unsigned d, unsigned n, const std::string& ch_text, std::uint64_t bound) {
  const auto ch = literal("--char", ch_text, parse_char);
  const auto types = admissible_nonsplit_types(d, n, ch, bound);
  Report r;
  r.parameters = {{"d", d}, {"n", n}, {"char", ch.p()}, {"bound", bound}};
  json list = json::array();
  std::ostringstream text;
  for (const auto& t : types) {
    list.push_back(t.literal());
    text << t.literal() << "\n";
  }
  r.result = {{"types", list}};
  r.text = text.str();
  return r;
}

json factorization_json(const UnitFactorization& f) { return {{"sub", f.sub}, {"quot", f.quot}}; }

std::string factorization_text(const UnitFactorization& f) {
  auto side = [](const std::vector<std::int64_t>& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(std::to_string(x));
    return "(" + join(parts, ",") + ")";
  };
  return side(f.sub) + " | " + side(f.quot);
}

Report do_kq(unsigned d, unsigned rank, unsigned t, std::int64_t bound, bool parallel) {
  const auto solved = unit_factorization_solve(d, rank, t);
  const auto found = unit_factorization_search(d, rank, t, bound, parallel);

  bool agree = false;
  if (solved.status == UnitSolveResult::Status::NonUnique) {
    auto inside = [&](const std::vector<std::int64_t>& v) {
      return std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x >= -bound && x <= bound; });
    };
    const bool in_box = inside(solved.solution.sub) && inside(solved.solution.quot);
    agree = !in_box || std::find(found.begin(), found.end(), solved.solution) != found.end();
  } else {
    agree = found == std::vector<UnitFactorization>{solved.solution};
  }

  Report r;
  r.parameters = {{"d", d}, {"r", rank}, {"t", t}, {"bound", bound}, {"parallel", parallel}};
  json sols = json::array();
  for (const auto& f : found) sols.push_back(factorization_json(f));
  r.result = {{"status", to_string(solved.status)},
              {"solution", factorization_json(solved.solution)},
              {"search", sols},
              {"agree", agree}};
  std::ostringstream text;
  text << "solve:  " << to_string(solved.status) << "  " << factorization_text(solved.solution) << "\n";
  text << "search: " << found.size() << " solution(s) with coefficients in [-" << bound << ", " << bound << "]\n";
  for (const auto& f : found) text << "  " << factorization_text(f) << "\n";
  text << (agree ? "agree" : "DISAGREE") << "\n";
  r.text = text.str();
  r.code = agree ? 0 : 1;
  return r;
}

Report do_eq7(unsigned d, unsigned n, const std::string& grouping_text, const std::string& roots_text,
              const std::string& shift_text) {
  const auto grouping = literal("--grouping", grouping_text, parse_grouping);
  const auto forms =
      literal("--roots", roots_text, [](const std::string& s) { return parse_polynomial_list(s); });
  std::vector<LinearRoot> roots;
  for (const auto& f : forms) roots.push_back(literal("--roots", to_string(f), [&](const std::string&) {
    return LinearRoot(f);
  }));
  const mpz_class shift = literal("--shift", shift_text, [](const std::string& s) {
    TextCursor c(s);
    const mpz_class v = c.integer();
    c.expect_end();
    return v;
  });
  const auto audit = whitney_residual_audit(d, n, grouping, roots, shift);

  Report r;
  json blocks = json::array();
  for (const auto& b : grouping) blocks.push_back({{"u", b.u}, {"rank", b.rank}});
  r.parameters = {{"d", d}, {"n", n}, {"grouping", blocks}, {"roots", polynomials(forms)}, {"shift", big(shift)}};
  json comps = json::array();
  std::ostringstream text;
  text << "lhs:     " << to_string(audit.lhs) << "\n";
  text << "product: " << to_string(audit.product) << "\n";
  for (const auto& c : audit.components) {
    comps.push_back({{"t_power", c.t_power}, {"degree", c.degree}, {"solutions", set_json(c.solutions)}});
    text << "  T^" << c.t_power << " degree " << c.degree << ": " << c.solutions.to_string() << "\n";
  }
  r.result = {{"lhs", to_string(audit.lhs)},
              {"product", to_string(audit.product)},
              {"components", comps},
              {"admissible", set_json(audit.admissible)}};
  text << "admissible a: " << audit.admissible.to_string() << "\n";
  r.text = text.str();
  r.code = audit.admissible.is_empty() ? 1 : 0;
  return r;
}

Report do_strong(const std::string& shape_text, const std::vector<std::string>& type_texts) {
  const auto shape = literal("--shape", shape_text, parse_shape);
  std::vector<SplittingType> types;
  for (const auto& t : type_texts) types.push_back(literal("--type", t, parse_type));
  const auto audit = strongly_uniform_audit(shape, types);
  Report r;
  std::vector<std::string> lits;
  for (const auto& t : types) lits.push_back(t.literal());
  r.parameters = {{"shape", shape.literal()}, {"types", lits}};
  r.result = {{"pass", audit.pass},
              {"component", audit.component ? json(*audit.component) : json(nullptr)},
              {"reason", audit.reason},
              {"common_value", audit.common_value ? json(*audit.common_value) : json(nullptr)}};
  if (audit.pass) {
    r.text = "Pass: every family splits as O(" + std::to_string(*audit.common_value) + ")^" +
             std::to_string(types.front().rank()) + "\n";
  } else {
    r.text = "Fail{component=" + std::to_string(*audit.component) + "}: " + audit.reason + "\n";
  }
  r.code = audit.pass ? 0 : 1;
  return r;
}

const char* const kGrammar = R"grammar(Literal grammar:
  polynomial  expr := term (('+'|'-') term)*     term := unary ('*' unary)*
              unary := ('+'|'-') unary | power   power := atom ('^' digits)?
              atom := digits | X<k> (k >= 1) | T | H | '(' expr ')'
              e.g. "X1^2 + 2*X1*X2", "T - X3", "-(H+1)^2"
  context     P(m) | Fbar(d,n)              e.g. "P(2)", "Fbar(2,4)"
  shape       F(d1,...,ds;n)                e.g. "F(1,2,3;4)", "F(2;5)"
  type        (a1,...,ar)                   e.g. "(0,-2)"
  case        I | II
  char        0 | p (p prime)
  grouping    (u1,r1),(u2,r2),...           e.g. "(0,1),(-1,1)"
  roots       comma-separated linear forms  e.g. "-X1,-X2"
  vars        comma-separated variables     e.g. "X1,X2,T"

Negative option values may be written "--b -2" or "--b=-2".
Exit codes: 0 success, 1 audit Fail or verification false, 2 invalid input.)grammar";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chow-ring, Chern-polynomial and splitting-type computations.", "flagchow"};
  app.require_subcommand(1);
  app.footer(kGrammar);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report instead of text");

  std::function<Report()> action;
  std::string command;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&command, name] { command = name; });
    return s;
  };

  std::string ctx, poly, p, q, vars, shape, type, lcase, ch, grouping, roots, shift = "0";
  std::vector<std::string> types;
  unsigned d = 0, n = 0, rank = 0, k = 0, t = 0;
  long beta = 0, b = 0;
  std::uint64_t type_bound = 32;
  std::int64_t coef_bound = 3;
  bool parallel = false;

  auto* reduce = sub("reduce", "Decide whether a polynomial vanishes in a Chow ring");
  reduce->add_option("--ctx", ctx, "Ring: P(m) or Fbar(d,n)")->required();
  reduce->add_option("--poly", poly, "Polynomial in the ring's variables")->required();

  auto* equal = sub("equal", "Decide equality of two polynomials in a Chow ring");
  equal->add_option("--ctx", ctx, "Ring: P(m) or Fbar(d,n)")->required();
  equal->add_option("--p", p, "First polynomial")->required();
  equal->add_option("--q", q, "Second polynomial")->required();

  auto* hom = sub("hom", "Complete homogeneous symmetric polynomial h_k");
  hom->add_option("--k", k, "Degree")->required();
  hom->add_option("--vars", vars, "Variables, e.g. X1,X2,X3")->required();

  auto* identity = sub("identity", "Check h_(n-d)(T,bX1..bXd) - b^(n-d) h_(n-d)(X) = (T-bX(d+1)) h_(n-d-1)(T,bX)");
  identity->add_option("--d", d)->required();
  identity->add_option("--n", n)->required();
  identity->add_option("--beta", beta, "Negative integer")->required();

  auto* hnfactor = sub("hnfactor", "Split prod (T+bXi) into the rank d-1 piece and T+bXd");
  hnfactor->add_option("--d", d)->required();
  hnfactor->add_option("--n", n)->required();
  hnfactor->add_option("--b", b, "Negative integer")->required();

  auto* lines = sub("lines", "Line components of a flag variety");
  lines->add_option("--shape", shape, "Flag shape F(d1,...;n)")->required();

  auto* gap = sub("gap", "Adjacent-gap audit of a splitting type");
  gap->add_option("--type", type, "Splitting type (a1,...,ar)")->required();
  gap->add_option("--case", lcase, "I or II")->required();

  auto* slope_cmd = sub("slope", "Exact slope of a splitting type");
  slope_cmd->add_option("--type", type, "Splitting type (a1,...,ar)")->required();

  auto* classify = sub("classify", "Bundle classes compatible with a uniform splitting type on G(d,n)");
  classify->add_option("--d", d)->required();
  classify->add_option("--n", n)->required();
  classify->add_option("--r", rank, "Rank")->required();
  classify->add_option("--type", type, "Splitting type (a1,...,ar)")->required();
  classify->add_option("--char", ch, "0 or a prime")->required();

  auto* enumerate = sub("enumerate", "Normalized non-split types (0,...,0,b) with -b <= bound");
  enumerate->add_option("--d", d)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--char", ch, "0 or a prime")->required();
  enumerate->add_option("--bound", type_bound, "Largest -b")->capture_default_str();

  auto* kq = sub("kq", "Unit equation c(A)c(B) = 1 in Z[H]/H^d: closed-form solve against exhaustive search");
  kq->add_option("--d", d)->required();
  kq->add_option("--r", rank)->required();
  kq->add_option("--t", t)->required();
  kq->add_option("--bound", coef_bound, "Search coefficient bound")->capture_default_str();
  kq->add_flag("--parallel", parallel, "Split the search across threads");

  auto* eq7 = sub("eq7", "Admissible multiples a of h_(n-d)(X1..X(d+1)) in the Whitney comparison");
  eq7->add_option("--d", d)->required();
  eq7->add_option("--n", n)->required();
  eq7->add_option("--grouping", grouping, "Blocks (u,r),... with u decreasing")->required();
  eq7->add_option("--roots", roots, "Linear roots of the left-hand side")->required();
  eq7->add_option("--shift", shift, "Multiple of h_(n-d) added to the left-hand side")->capture_default_str();

  auto* strong = sub("strong", "Strongly uniform audit on the complete flag");
  strong->add_option("--shape", shape, "Complete flag F(1,...,n-1;n)")->required();
  strong->add_option("--type", types, "One splitting type per family, in order (repeat)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::map<std::string, std::function<Report()>> handlers{
      {"reduce", [&] { return do_reduce(ctx, poly); }},
      {"equal", [&] { return do_equal(ctx, p, q); }},
      {"hom", [&] { return do_hom(k, vars); }},
      {"identity", [&] { return do_identity(d, n, beta); }},
      {"hnfactor", [&] { return do_hnfactor(d, n, b); }},
      {"lines", [&] { return do_lines(shape); }},
      {"gap", [&] { return do_gap(type, lcase); }},
      {"slope", [&] { return do_slope(type); }},
      {"classify", [&] { return do_classify(d, n, rank, type, ch); }},
      {"enumerate", [&] { return do_enumerate(d, n, ch, type_bound); }},
      {"kq", [&] { return do_kq(d, rank, t, coef_bound, parallel); }},
      {"eq7", [&] { return do_eq7(d, n, grouping, roots, shift); }},
      {"strong", [&] { return do_strong(shape, types); }},
  };

  auto fail = [&](const std::string& kind, const std::string& message) {
    err << "error: " << message << "\n";
    if (as_json) {
      out << json{{"schema", 1}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}}.dump(2)
          << "\n";
    }
    return 2;
  };

  Report report;
  try {
    report = handlers.at(command)();
  } catch (const OptionError& e) {
    return fail(e.kind(), e.what());
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const ValidationError& e) {
    return fail("validation", e.what());
  } catch (const UnsupportedError& e) {
    return fail("unsupported", e.what());
  }

  if (as_json) {
    json doc = report.result;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["parameters"] = report.parameters;
    out << doc.dump(2) << "\n";
  } else {
    out << report.text;
  }
  return report.code;
}

}  // namespace flagchow::cli
