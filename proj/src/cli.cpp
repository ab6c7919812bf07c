#include "salg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "salg/catalog.hpp"
#include "salg/formats.hpp"
#include "salg/linmap.hpp"
#include "salg/polymap.hpp"
#include "salg/random.hpp"

namespace salg::cli {

namespace {

using Q = Rational;

constexpr Index kMaxCliArity = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses a file, prefixing parse errors with its path.
template <typename Parser>
auto parse_file(const std::string& path, Parser parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Algebra<Q> load_algebra(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return catalog<Q>(std::string_view(source).substr(prefix.size()));
  return parse_file(source, [](std::string_view t) { return parse_algebra(t); });
}

Element<Q> element_arg(const Algebra<Q>& alg, const std::string& text) {
  Element<Q> a;
  try {
    a = parse_element(text);
  } catch (const ParseError& e) {
    throw UsageError("element '" + text + "': " + e.message() + " at column " + std::to_string(e.column()));
  }
  if (a.size() != alg.dim())
    throw UsageError("element '" + text + "' has " + std::to_string(a.size()) + " coordinates, algebra dim is " +
                     std::to_string(alg.dim()));
  return a;
}

LinearMap<Q> endomorphism_arg(const Algebra<Q>& alg, const std::string& path) {
  LinearMap<Q> f = parse_file(path, [](std::string_view t) { return parse_map(t); });
  if (f.source_dim() != alg.dim() || f.target_dim() != alg.dim())
    throw UsageError(path + ": map must be " + std::to_string(alg.dim()) + " x " + std::to_string(alg.dim()));
  return f;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_dims(const std::vector<Index>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? ", " : "") + std::to_string(dims[i]);
  return out;
}

void print_subspace(std::ostream& out, const char* what, const Subspace<Q>& s) {
  out << what << " dim: " << s.dim() << "\n";
  for (Index i = 0; i < s.dim(); ++i) out << format_element(s.basis(i)) << "\n";
}

struct Options {
  std::string algebra;
  std::string convention = "left";
  std::uint64_t seed = 0;
  int samples = 100;
  std::vector<std::string> elements;
  std::string file;
  std::string file2;
  std::string kind;

  Convention conv() const { return convention == "right" ? Convention::right : Convention::left; }
};

int cmd_info(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  out << "algebra: " << alg.name() << "\n";
  out << "dim: " << alg.dim() << "\n";
  out << "unit: " << (alg.unit() ? format_element(*alg.unit()) : std::string("none")) << "\n";
  out << "commutative: " << yes_no(is_commutative(alg)) << "\n";
  out << "associative: " << yes_no(is_associative(alg)) << "\n";
  out << "center dim: " << center(alg).dim() << "\n";
  out << "nucleus dim: " << nucleus(alg).dim() << "\n";
  return kOk;
}

int cmd_mul(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  if (o.elements.size() != 2) throw UsageError("mul takes exactly two elements");
  out << format_element(mul(alg, element_arg(alg, o.elements[0]), element_arg(alg, o.elements[1]))) << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  Sampler sampler(o.seed);
  bool teichmuller = true;
  for (int s = 0; s < o.samples; ++s) {
    const auto a = sampler.vector<Q>(alg.dim());
    const auto b = sampler.vector<Q>(alg.dim());
    const auto c = sampler.vector<Q>(alg.dim());
    const auto d = sampler.vector<Q>(alg.dim());
    if (!is_zero(teichmuller_defect(alg, a, b, c, d))) teichmuller = false;
  }
  out << "commutative: " << yes_no(is_commutative(alg)) << ", associative: " << yes_no(is_associative(alg))
      << ", Teichmüller: " << (teichmuller ? "pass" : "FAIL") << "\n";
  return teichmuller ? kOk : kNegative;
}

int cmd_center(const Options& o, std::ostream& out) {
  print_subspace(out, "center", center(load_algebra(o.algebra)));
  return kOk;
}

int cmd_nucleus(const Options& o, std::ostream& out) {
  print_subspace(out, "nucleus", nucleus(load_algebra(o.algebra)));
  return kOk;
}

int cmd_bmatrix(const Options& o, std::ostream& out) {
  const BMatrix<Q> b = b_matrix(load_algebra(o.algebra), o.conv());
  out << "convention: " << to_string(b.convention) << "\n";
  out << "rank: " << rank(b) << "\n";
  out << format_matrix(b.entries);
  return kOk;
}

int cmd_to_tensor(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const SolveOutcome<Tensor2<Q>> outcome = map_to_tensor(alg, endomorphism_arg(alg, o.file), o.conv());
  if (const auto* u = std::get_if<Unique<Tensor2<Q>>>(&outcome)) {
    out << "UNIQUE\n" << serialize_tensor(u->solution);
  } else if (const auto* a = std::get_if<Affine<Tensor2<Q>>>(&outcome)) {
    out << "AFFINE\nnullspace dim: " << a->nullspace.size() << "\n# particular\n" << serialize_tensor(a->particular);
    for (std::size_t i = 0; i < a->nullspace.size(); ++i)
      out << "# nullspace " << i << "\n" << serialize_tensor(a->nullspace[i]);
  } else {
    out << "INCONSISTENT\n";
  }
  return kOk;
}

int cmd_from_tensor(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const Tensor2<Q> t = parse_file(o.file, [](std::string_view s) { return parse_tensor(s); });
  if (t.dim() != alg.dim()) throw UsageError(o.file + ": tensor dimension does not match algebra");
  out << serialize_map(tensor_to_map(alg, t, o.conv()));
  return kOk;
}

int cmd_gens(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const GeneratorSet<Q> gens = generator_set(alg, o.conv());
  std::string names = "δ";
  for (const auto& [k, m] : gens.elementary) names += ", E^" + std::to_string(k) + "_" + std::to_string(m);
  out << "generators: " << gens.size() << " (" << names << "); orbit dims: " << join_dims(gens.orbit_dims) << "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) out << "# generator " << i << "\n" << serialize_map(gens.generators[i]);
  return kOk;
}

int cmd_orbit_eq(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const Subspace<Q> f = orbit_span(alg, endomorphism_arg(alg, o.file), o.conv());
  const Subspace<Q> g = orbit_span(alg, endomorphism_arg(alg, o.file2), o.conv());
  const bool equal = f == g;
  out << "orbit dims: " << f.dim() << ", " << g.dim() << "\n";
  out << "equal: " << yes_no(equal) << "\n";
  return equal ? kOk : kNegative;
}

PolyMap<Q> poly_arg(const Algebra<Q>& alg, const std::string& path) {
  PolyMap<Q> f = parse_file(path, [](std::string_view t) { return parse_polymap(t); });
  if (f.dim != alg.dim()) throw UsageError(path + ": poly map dimension does not match algebra");
  if (f.arity > kMaxCliArity) throw UsageError(path + ": arity above " + std::to_string(kMaxCliArity));
  return f;
}

int cmd_poly_eval(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const PolyMap<Q> f = poly_arg(alg, o.file);
  if (static_cast<Index>(o.elements.size()) != f.arity)
    throw UsageError("poly map has arity " + std::to_string(f.arity) + ", got " +
                     std::to_string(o.elements.size()) + " elements");
  std::vector<Element<Q>> xs;
  for (const auto& e : o.elements) xs.push_back(element_arg(alg, e));
  out << format_element(eval_poly(f, xs)) << "\n";
  return kOk;
}

int cmd_poly_check(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const PolyMap<Q> f = poly_arg(alg, o.file);
  const bool holds = poly_symmetry(f, o.kind == "skew" ? SymmetryKind::skew : SymmetryKind::symmetric);
  out << o.kind << ": " << yes_no(holds) << "\n";
  return holds ? kOk : kNegative;
}

int cmd_change_basis(const Options& o, std::ostream& out) {
  const Algebra<Q> alg = load_algebra(o.algebra);
  const LinearMap<Q> p = endomorphism_arg(alg, o.file);
  out << serialize_algebra(change_basis(alg, p.matrix));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in algebras given by structure constants", "salg"};
  Options o;
  app.add_option("--algebra", o.algebra, "Algebra file, or builtin:<name>")->required();
  app.add_option("--convention", o.convention, "Bracketing of the tensor action")
      ->check(CLI::IsMember({"left", "right"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--samples", o.samples, "Sample count for randomized checks")->check(CLI::NonNegativeNumber);
  app.require_subcommand(1);

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, h);
    return sub;
  };

  add("info", "Dimension, unit, properties, center and nucleus dimensions", cmd_info);
  add("mul", "Product of two elements", cmd_mul)->add_option("elements", o.elements)->required()->expected(2);
  add("check", "Property flags and a randomized Teichmüller identity check", cmd_check);
  add("center", "Basis of the center", cmd_center);
  add("nucleus", "Basis of the nucleus", cmd_nucleus);
  add("bmatrix", "Matrix from standard tensor components to map coordinates", cmd_bmatrix);
  add("to-tensor", "Standard components of a tensor representing a map", cmd_to_tensor)
      ->add_option("map", o.file)
      ->required();
  add("from-tensor", "Map identified with a tensor", cmd_from_tensor)->add_option("tensor", o.file)->required();
  add("gens", "Generator set of L(A;A) under the tensor action", cmd_gens);
  CLI::App* orbit = add("orbit-eq", "Whether two maps have the same orbit", cmd_orbit_eq);
  orbit->add_option("first", o.file)->required();
  orbit->add_option("second", o.file2)->required();
  CLI::App* peval = add("poly-eval", "Evaluate a polylinear map", cmd_poly_eval);
  peval->add_option("poly", o.file)->required();
  peval->add_option("elements", o.elements)->required();
  CLI::App* pcheck = add("poly-check", "Symmetry test of a polylinear map", cmd_poly_check);
  pcheck->add_option("poly", o.file)->required();
  pcheck->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"symmetric", "skew"}));
  add("change-basis", "Structure constants in a new basis (columns of P)", cmd_change_basis)
      ->add_option("matrix", o.file)
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace salg::cli
