#include "kolmo/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "kolmo/errors.hpp"
#include "kolmo/io.hpp"
#include "kolmo/numeric.hpp"
#include "kolmo/suites.hpp"

namespace kolmo::cli {

namespace {

using io::json;

enum class Format { Text, Json };

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::Text;

  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw SyntaxError(0, "list entry");
    parts.push_back(item.substr(b, e - b + 1));
  }
  if (parts.empty()) throw SyntaxError(0, "comma-separated list");
  return parts;
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector v;
  for (const auto& s : split_list(text)) v.push_back(parse_rational(s));
  return v;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> v;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || !std::isfinite(x)) throw SyntaxError(0, "floating-point number, got \"" + s + "\"");
    v.push_back(x);
  }
  return v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vector_text(const RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

void print_field(std::ostream& out, const PolyVectorField& vf) {
  for (std::size_t i = 0; i < vf.dim(); ++i) out << "P" << i + 1 << " = " << vf[i].to_string() << '\n';
}

std::string integral_text(const DarbouxIntegral& integral) {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < integral.surfaces().size(); ++i) {
    const Rational& e = integral.exponents()[i];
    if (e == 0) continue;
    std::string f = "(" + integral.surfaces()[i].defining().to_string() + ")";
    if (e != 1) f += "^(" + to_string(e) + ")";
    factors.push_back(f);
  }
  return join(factors, " * ");
}

PolyVectorField load_field(const std::string& path, std::optional<std::size_t> dim) {
  return io::field_from_json(io::load_file(path), dim);
}

// --- subcommands -----------------------------------------------------------

int cmd_check(const Context& ctx, const std::string& path, std::optional<std::size_t> dim) {
  const PolyVectorField vf = load_field(path, dim);
  const SphereReport rep = is_kolmogorov_on_sphere(vf);
  if (ctx.format == Format::Json) {
    json j = {{"dim", vf.dim()}, {"kolmogorov", rep.kolmogorov}, {"sphere_invariant", rep.sphere_invariant()}};
    j["sphere_cofactor"] = rep.sphere_cofactor ? json(rep.sphere_cofactor->to_string()) : json(nullptr);
    ctx.emit(j);
  } else {
    ctx.out << "kolmogorov=" << (rep.kolmogorov ? "true" : "false")
            << " sphere_invariant=" << (rep.sphere_invariant() ? "true" : "false") << '\n';
    if (rep.sphere_cofactor) ctx.out << "sphere cofactor: " << rep.sphere_cofactor->to_string() << '\n';
  }
  return rep.on_sphere() ? 0 : 1;
}

int cmd_cofactor(const Context& ctx, const std::string& path, std::optional<std::size_t> dim,
                 const std::string& surface) {
  const PolyVectorField vf = load_field(path, dim);
  const Hypersurface h(parse(surface, vf.dim()));
  const auto k = cofactor(vf, h);
  if (ctx.format == Format::Json) {
    json j = {{"surface", h.defining().to_string()}, {"invariant", k.has_value()}};
    if (k) j.update(io::to_json(*k));
    ctx.emit(j);
  } else if (k) {
    ctx.out << "invariant, cofactor " << k->poly.to_string() << '\n';
  } else {
    ctx.out << "not invariant\n";
  }
  return k ? 0 : 1;
}

CubicKolmogorovForm cubic_of(const PolyVectorField& vf) {
  auto form = recover_cubic_form(vf);
  if (!form) throw PreconditionViolated("field is not a cubic Kolmogorov field on the sphere in canonical form");
  return *form;
}

int cmd_darboux(const Context& ctx, const std::string& path, std::optional<std::size_t> dim, const std::string& g) {
  const PolyVectorField vf = load_field(path, dim);
  const CubicKolmogorovForm form = cubic_of(vf);
  const Hypersurface gs(parse(g, vf.dim()));
  const auto k = cofactor(vf, gs);
  if (!k) {
    if (ctx.format == Format::Json) ctx.emit({{"g", gs.defining().to_string()}, {"invariant", false}});
    else ctx.out << "g is not invariant\n";
    return 1;
  }
  const RationalMatrix b = build_matrix_B(form, *k);
  const auto integrals = find_darboux(form, gs);
  std::vector<bool> verified;
  for (const auto& i : integrals) verified.push_back(verify_first_integral(vf, i));

  if (ctx.format == Format::Json) {
    json list = json::array();
    for (std::size_t i = 0; i < integrals.size(); ++i) {
      json e = io::to_json(integrals[i]);
      e["verified"] = static_cast<bool>(verified[i]);
      list.push_back(e);
    }
    ctx.emit({{"g", gs.defining().to_string()},
              {"invariant", true},
              {"cofactor", k->poly.to_string()},
              {"rank_B", rank(b)},
              {"matrix_B", io::to_json(b)},
              {"integrals", list}});
  } else {
    ctx.out << "cofactor of g: " << k->poly.to_string() << '\n';
    ctx.out << "rank(B) = " << rank(b) << '\n';
    ctx.out << integrals.size() << " integral(s)\n";
    for (std::size_t i = 0; i < integrals.size(); ++i)
      ctx.out << "  exponents " << vector_text(integrals[i].exponents()) << ": " << integral_text(integrals[i])
              << (verified[i] ? "  [verified]" : "  [NOT verified]") << '\n';
  }
  return integrals.empty() ? 1 : 0;
}

int cmd_syzygy(const Context& ctx, const std::string& path) {
  const CubicKolmogorovForm form = io::form_from_json(io::load_file(path));
  const PolyVectorField vf = assemble(form);
  const auto integrals = syzygy_first_integral(form);
  if (ctx.format == Format::Json) {
    json list = json::array();
    for (const auto& i : integrals) {
      json e = io::to_json(i);
      e["verified"] = verify_first_integral(vf, i);
      list.push_back(e);
    }
    ctx.emit({{"integrals", list}});
  } else {
    ctx.out << integrals.size() << " monomial integral(s)\n";
    for (const auto& i : integrals)
      ctx.out << "  " << integral_text(i) << (verify_first_integral(vf, i) ? "  [verified]" : "  [NOT verified]")
              << '\n';
  }
  return integrals.empty() ? 1 : 0;
}

int cmd_classify(const Context& ctx, const std::string& path, const std::string& a0, const std::string& a) {
  const CubicKolmogorovForm form = io::form_from_json(io::load_file(path));
  const HyperplaneSpec hp(parse_rational(a0), parse_rational_list(a));
  if (hp.dim() != form.dim) throw DimMismatch("--a has " + std::to_string(hp.dim()) + " entries, form has dim " + std::to_string(form.dim));
  const HyperplaneReport rep = classify_hyperplane(form, hp);
  if (ctx.format == Format::Json) {
    json j = {{"hyperplane", hp.linear_polynomial().to_string()},
              {"verdict", to_string(rep.verdict)},
              {"conditions_hold", rep.conditions_hold}};
    j["violation"] = rep.violation.empty() ? json(nullptr) : json(rep.violation);
    j["predicted"] = rep.predicted ? json{{"k0", io::to_json(rep.predicted->k0)}, {"k", io::to_json(rep.predicted->k)}}
                                   : json(nullptr);
    j["direct"] = rep.direct ? io::to_json(*rep.direct) : json(nullptr);
    ctx.emit(j);
  } else {
    ctx.out << "verdict: " << to_string(rep.verdict) << '\n';
    if (!rep.violation.empty()) ctx.out << "violated: " << rep.violation << '\n';
    if (rep.direct) ctx.out << "cofactor: " << rep.direct->poly.to_string() << '\n';
  }
  return rep.verdict == HyperplaneCase::NotInvariant ? 1 : 0;
}

int cmd_linear_fi(const Context& ctx, const std::string& a0, const std::string& a, const std::string& seed_path) {
  const HyperplaneSpec hp(parse_rational(a0), parse_rational_list(a));
  const PolySquare seed = io::seed_from_json(io::load_file(seed_path));
  const KolmogorovForm form = construct_linear_fi_field(hp, seed);
  const PolyVectorField vf = construct_from_form(form);
  const bool ok = lie_derivative(vf, hp.linear_polynomial()).is_zero();
  if (ctx.format == Format::Json) {
    ctx.emit({{"form", io::to_json(form)},
              {"field", io::to_json(vf)},
              {"first_integral", hp.linear_polynomial().to_string()},
              {"verified", ok}});
  } else {
    print_field(ctx.out, vf);
    ctx.out << "first integral " << hp.linear_polynomial().to_string() << (ok ? " [verified]" : " [NOT verified]")
            << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_complete(const Context& ctx, std::size_t n, unsigned m, const std::string& atilde) {
  const auto fam = construct_completely_integrable(n, m, parse(atilde, n + 1));
  std::vector<bool> verified;
  bool all = fam.jacobian_rank == n;
  for (const auto& i : fam.integrals) {
    verified.push_back(lie_derivative(fam.field, i.surfaces().front().defining()).is_zero());
    all = all && verified.back();
  }
  if (ctx.format == Format::Json) {
    json list = json::array();
    for (std::size_t i = 0; i < fam.integrals.size(); ++i) {
      json e = io::to_json(fam.integrals[i]);
      e["verified"] = static_cast<bool>(verified[i]);
      list.push_back(e);
    }
    ctx.emit({{"field", io::to_json(fam.field)},
              {"integrals", list},
              {"sample_point", io::to_json(fam.sample_point)},
              {"jacobian", io::to_json(fam.jacobian)},
              {"jacobian_rank", fam.jacobian_rank}});
  } else {
    print_field(ctx.out, fam.field);
    for (std::size_t i = 0; i < fam.integrals.size(); ++i)
      ctx.out << "first integral " << integral_text(fam.integrals[i])
              << (verified[i] ? " [verified]" : " [NOT verified]") << '\n';
    ctx.out << "jacobian rank " << fam.jacobian_rank << " at " << vector_text(fam.sample_point) << '\n';
  }
  return all ? 0 : 1;
}

int cmd_cubic(const Context& ctx, const std::string& path) {
  const CubicKolmogorovForm form = io::form_from_json(io::load_file(path));
  const PolyVectorField vf = assemble(form);
  if (ctx.format == Format::Json) ctx.emit(io::to_json(vf));
  else print_field(ctx.out, vf);
  return 0;
}

int cmd_hamiltonian_field(const Context& ctx, const std::string& path, std::optional<std::size_t> dim) {
  const PolyVectorField vf = load_field(path, dim);
  const HamiltonianReport rep = is_hamiltonian(vf);
  if (ctx.format == Format::Json) {
    json defects = json::array();
    for (const auto& d : rep.defects)
      defects.push_back({{"row", d.row + 1}, {"col", d.col + 1}, {"defect", d.defect.to_string()}});
    ctx.emit({{"hamiltonian", rep.is_hamiltonian()}, {"defects", defects}});
  } else {
    ctx.out << (rep.is_hamiltonian() ? "hamiltonian" : "not hamiltonian") << '\n';
    for (const auto& d : rep.defects)
      ctx.out << "  dG" << d.row + 1 << "/dx" << d.col + 1 << " - dG" << d.col + 1 << "/dx" << d.row + 1 << " = "
              << d.defect.to_string() << '\n';
  }
  return rep.is_hamiltonian() ? 0 : 1;
}

int cmd_constraint_space(const Context& ctx, std::size_t n) {
  if (n == 0) throw PreconditionViolated("--n must be positive");
  const ConstraintSpace space = hamiltonian_constraint_space(n);
  if (ctx.format == Format::Json) {
    json basis = json::array();
    for (const auto& v : space.basis) basis.push_back(io::to_json(v));
    ctx.emit({{"n", n}, {"dimension", space.dimension}, {"parameters", space.parameter_names}, {"basis", basis}});
  } else {
    ctx.out << "dimension " << space.dimension << '\n';
    for (const auto& v : space.basis) ctx.out << "  " << vector_text(v) << '\n';
  }
  return 0;
}

int cmd_integrate(const Context& ctx, const std::string& path, std::optional<std::size_t> dim,
                  const std::string& x0, double h, std::size_t steps, const std::vector<std::string>& watch,
                  double tolerance) {
  const PolyVectorField vf = load_field(path, dim);
  const std::vector<double> start = parse_double_list(x0);
  const Trajectory traj = integrate_rk4(vf, start, h, steps);

  json drifts = json::array();
  bool ok = true;
  for (const auto& w : watch) {
    const DarbouxIntegral integral({1}, {Hypersurface(parse(w, vf.dim()))});
    json entry = {{"poly", integral.surfaces().front().defining().to_string()}};
    try {
      const double drift = conservation_report(traj, integral, DriftConfig{1e-12, tolerance});
      entry["max_drift"] = drift;
      entry["conserved"] = drift < tolerance;
      ok = ok && drift < tolerance;
      if (ctx.format == Format::Text)
        ctx.err << "watch " << entry["poly"].get<std::string>() << ": max relative drift " << drift << '\n';
    } catch (const DomainViolation& e) {
      entry["max_drift"] = nullptr;
      entry["conserved"] = false;
      entry["error"] = e.what();
      ok = false;
      if (ctx.format == Format::Text) ctx.err << "watch " << entry["poly"].get<std::string>() << ": " << e.what() << '\n';
    }
    drifts.push_back(entry);
  }

  if (ctx.format == Format::Json) {
    ctx.emit({{"h", h}, {"steps", steps}, {"times", traj.times}, {"states", traj.states}, {"watch", drifts}});
  } else {
    write_csv(ctx.out, traj);
  }
  return ok ? 0 : 1;
}

int cmd_certify(const Context& ctx, const std::string& suite, std::uint64_t seed, std::optional<std::size_t> instances) {
  const SuiteReport rep = run_suite(suite, seed, instances.value_or(default_instances(suite)));
  if (ctx.format == Format::Json) {
    ctx.emit({{"suite", rep.name},
              {"seed", rep.seed},
              {"instances", rep.instances},
              {"failures", rep.failures},
              {"passed", rep.passed()},
              {"notes", rep.notes}});
  } else {
    ctx.out << "suite " << rep.name << " seed " << rep.seed << ": " << rep.instances << " instances, " << rep.failures
            << " failure(s) " << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& n : rep.notes) ctx.out << "  " << n << '\n';
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for Kolmogorov polynomial vector fields on spheres", "kolmo"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string field_path, form_path, seed_path, surface, g, a0, a, x0, atilde, suite;
  std::optional<std::size_t> dim, instances;
  std::size_t n = 0, steps = 0;
  unsigned m = 0;
  double h = 0, tolerance = 1e-6;
  std::uint64_t seed = 0;
  std::vector<std::string> watch;
  bool constraint_space = false;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* check = sub(&app, "check", "Kolmogorov form and sphere invariance");
  check->add_option("--field", field_path)->required();
  check->add_option("--dim", dim);

  auto* cof = sub(&app, "cofactor", "Cofactor of an algebraic hypersurface");
  cof->add_option("--field", field_path)->required();
  cof->add_option("--dim", dim);
  cof->add_option("--surface", surface)->required();

  auto* darb = sub(&app, "darboux", "Darboux first integrals of a cubic field");
  darb->add_option("--field", field_path)->required();
  darb->add_option("--dim", dim);
  darb->add_option("--g", g)->required();

  auto* syz = sub(&app, "syzygy-fi", "Monomial first integrals from the kernel of [alpha; atilde]");
  syz->add_option("--form", form_path)->required();

  auto* cls = sub(&app, "classify-hyperplane", "Invariance of a0 + sum a_i x_i = 0");
  cls->add_option("--form", form_path)->required();
  cls->add_option("--a0", a0)->required();
  cls->add_option("--a", a)->required();

  auto* construct = sub(&app, "construct", "Field constructions");
  construct->require_subcommand(1, 1);
  auto* lin = sub(construct, "linear-fi", "Field with a linear first integral");
  lin->add_option("--a0", a0)->required();
  lin->add_option("--a", a)->required();
  lin->add_option("--seed", seed_path)->required();
  auto* comp = sub(construct, "complete", "Completely integrable field on S^n");
  comp->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  comp->add_option("--m", m)->required();
  comp->add_option("--atilde", atilde)->required();
  auto* cubic = sub(construct, "cubic", "Assemble a cubic field from (alpha, atilde)");
  cubic->add_option("--form", form_path)->required();

  auto* ham = sub(&app, "hamiltonian", "Hamiltonian test or constraint space");
  auto* ham_field = ham->add_option("--field", field_path);
  ham->add_option("--dim", dim);
  auto* ham_space = ham->add_flag("--constraint-space", constraint_space);
  auto* ham_n = ham->add_option("--n", n);
  ham_field->excludes(ham_space);
  ham_space->needs(ham_n);

  auto* integ = sub(&app, "integrate", "RK4 trajectory as CSV");
  integ->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  integ->add_option("--field", field_path)->required();
  integ->add_option("--dim", dim);
  integ->add_option("--x0", x0)->required();
  integ->add_option("--h", h)->required();
  integ->add_option("--steps", steps)->required();
  integ->add_option("--watch", watch)->take_all();
  integ->add_option("--tolerance", tolerance);

  auto* cert = sub(&app, "certify", "Randomized certification suite");
  cert->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  cert->add_option("--seed", seed);
  cert->add_option("--instances", instances);

  std::vector<std::string> argv_store{"kolmo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Context ctx{out, err, format == "json" ? Format::Json : Format::Text};
  try {
    if (*check) return cmd_check(ctx, field_path, dim);
    if (*cof) return cmd_cofactor(ctx, field_path, dim, surface);
    if (*darb) return cmd_darboux(ctx, field_path, dim, g);
    if (*syz) return cmd_syzygy(ctx, form_path);
    if (*cls) return cmd_classify(ctx, form_path, a0, a);
    if (*lin) return cmd_linear_fi(ctx, a0, a, seed_path);
    if (*comp) return cmd_complete(ctx, n, m, atilde);
    if (*cubic) return cmd_cubic(ctx, form_path);
    if (*ham) {
      if (constraint_space) return cmd_constraint_space(ctx, n);
      if (field_path.empty()) throw PreconditionViolated("hamiltonian needs --field FILE or --constraint-space --n N");
      return cmd_hamiltonian_field(ctx, field_path, dim);
    }
    if (*integ) return cmd_integrate(ctx, field_path, dim, x0, h, steps, watch, tolerance);
    if (*cert) return cmd_certify(ctx, suite, seed, instances);
  } catch (const NotInvariant& e) {
    err << "negative: " << e.what() << '\n';
    return 1;
  } catch (const NotHomogeneous& e) {
    err << "negative: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace kolmo::cli
