#include "ceresa3/autgroup.hpp"
#include "ceresa3/elimination.hpp"
#include "ceresa3/ggcomplex.hpp"
#include "ceresa3/io.hpp"
#include "ceresa3/quartic.hpp"
#include "ceresa3/theta.hpp"
#include "ceresa3/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ceresa3;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct QuarticInput {
  std::string path;
  bool klein = false;
  bool fermat = false;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--quartic", path, "quartic JSON {\"monomials\": {...}}");
    auto* k = cmd->add_flag("--klein", klein, "use x0^3 x1 + x1^3 x2 + x2^3 x0");
    auto* f = cmd->add_flag("--fermat", fermat, "use x0^4 + x1^4 + x2^4");
    p->excludes(k)->excludes(f);
    k->excludes(f);
  }

  QuarticCoefficients load() const {
    if (klein) return klein_quartic();
    if (fermat) return fermat_quartic();
    if (path.empty()) throw io::InputError("a quartic is required (--quartic FILE, --klein or --fermat)");
    return io::quartic_from_json(io::read_json_file(path));
  }
};

struct TauInput {
  std::string path;
  std::string preset = "generic";

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--tau", path, "period matrix JSON {\"re\": 3x3, \"im\": 3x3}");
    cmd->add_option("--preset", preset, "built-in point when --tau is absent")
        ->check(CLI::IsMember({"generic", "diag"}))
        ->excludes(p);
  }

  PeriodMatrix load() const {
    if (!path.empty()) return io::period_matrix_from_json(io::read_json_file(path));
    return preset == "diag" ? PeriodMatrix::diagonal_i() : generic_period_matrix();
  }
};

std::string generators_or_default(const std::string& path) {
  return path.empty() ? data_dir() + "/klein_generators.json" : path;
}

MatrixGroup load_group(const std::string& path, std::size_t cap) {
  auto gens = io::generators_from_json(io::read_json_file(generators_or_default(path)));
  try {
    return closure(gens, cap);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("closure: ") + e.what());
  }
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof()) throw io::InputError("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::array<int, 3> parse_bits(const std::string& text) {
  const auto v = parse_list<int>(text);
  if (v.size() != 3) throw io::InputError("characteristic needs three bits, got '" + text + "'");
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] != 0 && v[i] != 1) throw io::InputError("characteristic bits must be 0 or 1");
    out[i] = v[i];
  }
  return out;
}

unsigned theta_digits(const RunConfig& c) {
  return c.eps < 1e-13 ? std::max(c.precision, working_digits(c.eps, 0)) : 0;
}

void render_text(std::ostream& out, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const bool nested = v.is_object() || (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object()));
      out << indent << k << ":";
      if (nested) {
        out << "\n";
        render_text(out, v, indent + "  ");
      } else {
        out << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        render_text(out, v, indent + "  ");
        out << indent << "--\n";
      } else {
        out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(config.output);
  if (!f) throw io::InputError("cannot write " + config.output);
  f << text;
}

void emit_json(const RunConfig& config, const json& j) {
  if (config.format == "text") {
    std::ostringstream out;
    render_text(out, j, "");
    emit(config, out.str());
  } else {
    emit(config, j.dump(2) + "\n");
  }
}

json complex_json(const GGContext& ctx, int p) {
  const auto c = build_complex(ctx, p);
  json j = {{"p", p},
            {"term_dims", c.term_dims()},
            {"differential_ranks", differential_ranks(c)},
            {"homology_dims", homology_dims(c)}};
  if (p == 0) {
    const auto cs = cocycle_spaces(c);
    j["cocycle_dim"] = cs.cocycle_dim;
    j["coboundary_dim"] = cs.coboundary_dim;
  }
  return j;
}

json column_vectors(const CycloMatrix& m) {
  json cols = json::array();
  for (std::size_t k = 0; k < m.cols(); ++k) {
    json v = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(io::to_json(m(i, k)));
    cols.push_back(std::move(v));
  }
  return cols;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ceresa3: Green-Griffiths complexes, plane quartic forms, the Klein group and genus-3 theta constants"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::optional<unsigned> precision_flag;
  app.add_option("--eps", config.eps, "absolute/relative numerical tolerance")->capture_default_str();
  app.add_option("--precision", precision_flag, "significant digits for multiprecision paths (default 30)");
  app.add_option("--seed", config.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", config.output, "write output to a file instead of stdout");

  // complex
  auto* cmd_complex = app.add_subcommand("complex", "graded pieces of the Green-Griffiths complex");
  std::optional<int> complex_p;
  cmd_complex->add_option("--p", complex_p, "0, 1 or 2 (default: all)")->check(CLI::Range(0, 2));

  // forms
  auto* cmd_qc = app.add_subcommand("qc", "Q_C Gram matrix of a quartic");
  QuarticInput qc_in;
  qc_in.add_to(cmd_qc);
  auto* cmd_rc = app.add_subcommand("rc", "R_C form of h in S^2 A");
  std::string rc_h;
  cmd_rc->add_option("--element", rc_h, "JSON {\"p\": [3], \"q\": [q01, q02, q12]}")->required();
  auto* cmd_dc = app.add_subcommand("dc", "D_C = Q_C + R_C");
  QuarticInput dc_in;
  dc_in.add_to(cmd_dc);
  std::string dc_h;
  cmd_dc->add_option("--element", dc_h, "JSON {\"p\": [3], \"q\": [3]}")->required();
  auto* cmd_round = app.add_subcommand("roundtrip", "quartic -> Q_C -> quartic");
  QuarticInput round_in;
  round_in.add_to(cmd_round);
  auto* cmd_change = app.add_subcommand("change-basis", "substitute x -> g x in a quartic");
  QuarticInput change_in;
  change_in.add_to(cmd_change);
  std::string change_matrix;
  cmd_change->add_option("--matrix", change_matrix, "JSON 3x3 matrix of rational strings")->required();

  // groups
  std::string gen_path, module_name_arg;
  std::size_t cap = kDefaultClosureCap;
  auto add_group_opts = [&](CLI::App* cmd) {
    cmd->add_option("--generators", gen_path, "generator JSON (default: bundled Klein generators)");
    cmd->add_option("--cap", cap, "closure size limit")->capture_default_str();
  };
  auto* cmd_gorder = app.add_subcommand("group-order", "order of the group generated");
  add_group_opts(cmd_gorder);
  auto* cmd_gpres = app.add_subcommand("group-preserves", "check f o g = lambda_g f for every element");
  add_group_opts(cmd_gpres);
  QuarticInput gpres_in;
  gpres_in.add_to(cmd_gpres);
  auto* cmd_gmult = app.add_subcommand("group-multiplicity", "multiplicity of the trivial representation");
  add_group_opts(cmd_gmult);
  cmd_gmult->add_option("--module", module_name_arg, "B, A, S2A_detB, S4B, detA or detB (default: all)");
  auto* cmd_ginv = app.add_subcommand("group-invariants", "basis of the invariant subspace");
  add_group_opts(cmd_ginv);
  cmd_ginv->add_option("--module", module_name_arg, "B, A, S2A_detB, S4B, detA or detB")->required();

  // theta
  auto* cmd_theta = app.add_subcommand("theta", "theta constant with characteristic");
  TauInput theta_tau;
  theta_tau.add_to(cmd_theta);
  std::string mu = "0,0,0", nu = "0,0,0";
  cmd_theta->add_option("--mu", mu, "bits of 2a")->capture_default_str();
  cmd_theta->add_option("--nu", nu, "bits of 2b")->capture_default_str();
  auto* cmd_chi = app.add_subcommand("chi18", "product of the 36 even theta constants");
  TauInput chi_tau;
  chi_tau.add_to(cmd_chi);
  auto* cmd_min = app.add_subcommand("min-null", "smallest even theta constant");
  TauInput min_tau;
  min_tau.add_to(cmd_min);
  cmd_min->add_option("--threshold", config.threshold, "hyperelliptic candidate threshold")->capture_default_str();
  auto* cmd_transform = app.add_subcommand("transform-check", "modulus laws of chi18");
  TauInput tr_tau;
  tr_tau.add_to(cmd_transform);
  std::string kind = "translation", bmat = "1,0,0,0,0,0,0,0,0";
  cmd_transform->add_option("--kind", kind)->check(CLI::IsMember({"translation", "inversion"}))->capture_default_str();
  cmd_transform->add_option("--b", bmat, "integral symmetric B, 9 comma-separated entries")->capture_default_str();
  auto* cmd_cusp = app.add_subcommand("cusp-order", "slope of -log|chi18| along tau + i t E_jj");
  TauInput cusp_tau;
  cusp_tau.add_to(cmd_cusp);
  std::string t_text = "1,1.5,2,2.5,3,3.5,4";
  std::size_t direction = 0;
  bool control = false;
  cmd_cusp->add_option("--t", t_text, "increasing sample list")->capture_default_str();
  cmd_cusp->add_option("--direction", direction, "diagonal entry 0, 1 or 2")->check(CLI::Range(0, 2));
  cmd_cusp->add_flag("--control", control, "fit the t-independent value instead");

  // verification suites
  auto* cmd_kv = app.add_subcommand("klein-verify", "Klein quartic checks");
  cmd_kv->add_option("--generators", config.generators_path, "generator JSON");
  cmd_kv->add_option("--quartic", config.quartic_path, "quartic JSON");
  auto* cmd_cv = app.add_subcommand("coho-verify", "Green-Griffiths cohomology checks");
  cmd_cv->add_option("--trials", config.trials, "random equivariance trials")->capture_default_str();
  auto* cmd_tv = app.add_subcommand("chi18-verify", "theta layer checks");
  cmd_tv->add_option("--threshold", config.threshold, "hyperelliptic candidate threshold");
  for (auto* c : {cmd_kv, cmd_cv, cmd_tv}) c->add_flag("--timings", config.timings, "include runtimes in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (precision_flag) {
      config.precision = *precision_flag;
      config.precision_source = "flag";
    } else if (const char* env = std::getenv("CERESA3_PRECISION")) {
      try {
        config.precision = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw io::InputError(std::string("CERESA3_PRECISION is not a number: ") + env);
      }
      config.precision_source = std::string("env CERESA3_PRECISION=") + env;
    }
    config.validate();

    auto run_suite = [&](const std::string& name, const std::vector<CheckReport>& reports) {
      if (config.format == "text") emit(config, report_text(name, config, reports));
      else emit(config, report_json(name, config, reports).dump(2) + "\n");
      return all_pass(reports) ? 0 : kExitFail;
    };

    if (cmd_kv->parsed()) return run_suite("klein-verify", klein_verify(config));
    if (cmd_cv->parsed()) return run_suite("coho-verify", coho_verify(config));
    if (cmd_tv->parsed()) return run_suite("chi18-verify", chi18_verify(config));

    json out;
    if (cmd_complex->parsed()) {
      const GGContext ctx;
      if (complex_p) {
        out = complex_json(ctx, *complex_p);
      } else {
        out = json::array();
        for (int p = 0; p < 3; ++p) out.push_back(complex_json(ctx, p));
      }
    } else if (cmd_qc->parsed()) {
      out = io::to_json(summarize(qc_matrix(qc_in.load())));
    } else if (cmd_rc->parsed()) {
      out = io::to_json(summarize(rc_matrix(io::degree_two_from_json(io::read_json_file(rc_h)))));
    } else if (cmd_dc->parsed()) {
      out = io::to_json(dc_matrix(dc_in.load(), io::degree_two_from_json(io::read_json_file(dc_h))));
    } else if (cmd_round->parsed()) {
      const auto f = round_in.load();
      const auto form = summarize(qc_matrix(f));
      const auto back = quartic_from_form(form.form);
      out = {{"quartic", io::to_json(f)}, {"form", io::to_json(form)}, {"recovered", io::to_json(back)},
             {"equal", back == f}};
    } else if (cmd_change->parsed()) {
      const auto g = io::rational_matrix_from_json(io::read_json_file(change_matrix));
      const auto cc = change_coordinates(change_in.load(), g);
      out = {{"quartic", io::to_json(cc.quartic)},
             {"det", io::to_json(determinant(g))},
             {"q_matrix", io::matrix_to_json(cc.q_matrix.matrix())}};
    } else if (cmd_gorder->parsed()) {
      out = {{"order", load_group(gen_path, cap).order()}};
    } else if (cmd_gpres->parsed()) {
      const auto g = load_group(gen_path, cap);
      const auto cert = preserves_quartic(g, gpres_in.load());
      json scalars = json::array();
      for (const auto& s : cert.scalars) scalars.push_back(s ? io::to_json(*s) : json(nullptr));
      out = {{"order", g.order()}, {"preserved", cert.preserved}, {"all_scalars_one", cert.all_scalars_one()},
             {"scalars", scalars}};
    } else if (cmd_gmult->parsed()) {
      const auto g = load_group(gen_path, cap);
      std::vector<Module> modules;
      if (module_name_arg.empty()) {
        modules = {Module::B, Module::A, Module::S2A_detB, Module::S4B, Module::detA, Module::detB};
      } else {
        modules = {parse_module(module_name_arg)};
      }
      out = {{"order", g.order()}, {"multiplicities", json::object()}, {"character_norms", json::object()}};
      for (Module m : modules) {
        out["multiplicities"][module_name(m)] = trivial_multiplicity(g, m);
        out["character_norms"][module_name(m)] = character_norm(g, m).str();
      }
    } else if (cmd_ginv->parsed()) {
      const auto g = load_group(gen_path, cap);
      const Module m = parse_module(module_name_arg);
      const auto basis = invariant_subspace(g, m);
      out = {{"order", g.order()}, {"module", module_name(m)}, {"dimension", basis.cols()},
             {"basis", column_vectors(basis)}};
      if (m == Module::S4B) {
        json order = json::array();
        for (const auto& ms : multisets(3, 4)) {
          Exponent e{0, 0, 0};
          for (auto i : ms) ++e[i];
          order.push_back(exponent_key(e));
        }
        out["monomial_order"] = order;
      }
    } else if (cmd_theta->parsed()) {
      const ThetaChar c{parse_bits(mu), parse_bits(nu)};
      const auto v = theta_constant(c, theta_tau.load(), config.eps, theta_digits(config));
      out = {{"characteristic", io::to_json(c)}, {"even", c.is_even()}, {"value", io::to_json(v.value)},
             {"modulus", std::abs(v.value)}, {"eps", v.eps}, {"radius", v.radius}, {"digits", v.digits}};
    } else if (cmd_chi->parsed()) {
      const auto v = chi18(chi_tau.load(), config.eps, theta_digits(config));
      out = {{"value", io::to_json(v.value)}, {"modulus", std::abs(v.value)}, {"log_modulus", v.log_abs},
             {"error_bound", v.error_bound}, {"relative", v.relative}};
    } else if (cmd_min->parsed()) {
      const auto v = min_theta_null(min_tau.load(), config.eps, config.threshold);
      out = {{"characteristic", io::to_json(v.alpha)}, {"modulus", v.modulus},
             {"hyperelliptic_candidate", v.hyperelliptic_candidate}, {"threshold", config.threshold}};
    } else if (cmd_transform->parsed()) {
      const auto tau = tr_tau.load();
      TransformReport r;
      if (kind == "inversion") {
        r = transform_inversion(tau, config.eps);
      } else {
        const auto b = parse_list<long>(bmat);
        if (b.size() != 9) throw io::InputError("--b needs 9 entries");
        std::array<std::array<long, 3>, 3> bm{};
        for (std::size_t i = 0; i < 9; ++i) bm[i / 3][i % 3] = b[i];
        r = transform_translation(tau, bm, config.eps);
      }
      out = {{"kind", r.kind}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"relative_deviation", r.relative_deviation},
             {"phase", r.phase}};
    } else if (cmd_cusp->parsed()) {
      const auto tau = cusp_tau.load();
      const auto ts = parse_list<double>(t_text);
      const auto c = control ? cusp_control(tau, ts, config.precision) : cusp_order(tau, ts, direction, config.precision);
      json samples = json::array();
      for (const auto& s : c.samples) samples.push_back({{"t", s.t}, {"neg_log_abs", s.neg_log_abs}});
      out = {{"slope", c.fit.slope}, {"intercept", c.fit.intercept}, {"residual", c.fit.residual},
             {"digits", c.digits}, {"samples", samples}};
    }
    emit_json(config, out);
    return 0;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
