#include "ceresa3/verify.hpp"

#include "ceresa3/autgroup.hpp"
#include "ceresa3/elimination.hpp"
#include "ceresa3/ggcomplex.hpp"
#include "ceresa3/io.hpp"
#include "ceresa3/quartic.hpp"
#include "ceresa3/theta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#ifndef CERESA3_DATA_DIR
#define CERESA3_DATA_DIR "data"
#endif
#ifndef CERESA3_VERSION
#define CERESA3_VERSION "0.0.0"
#endif

namespace ceresa3 {

using nlohmann::json;

std::string tool_version() { return CERESA3_VERSION; }
std::string data_dir() { return CERESA3_DATA_DIR; }

void RunConfig::validate() const {
  if (!(eps > 0)) throw std::invalid_argument("--eps must be positive");
  if (precision == 0) throw std::invalid_argument("--precision must be positive");
  if (format != "json" && format != "text") throw std::invalid_argument("--format must be json or text");
  if (!(threshold > 0)) throw std::invalid_argument("--threshold must be positive");
}

json RunConfig::to_json() const {
  return {{"eps", eps},
          {"precision", precision},
          {"precision_source", precision_source},
          {"seed", seed},
          {"output", output.empty() ? "stdout" : output},
          {"format", format},
          {"trials", trials},
          {"threshold", threshold},
          {"generators", generators_path},
          {"quartic", quartic_path}};
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return !reports.empty();
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

struct Outcome {
  std::string computed;
  bool pass = false;
  std::string note;
};

class Runner {
 public:
  void check(std::string name, std::string expected, std::string provenance, const std::function<Outcome()>& body) {
    CheckReport r{std::move(name), std::move(expected), std::move(provenance), "", false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto o = body();
      r.computed = std::move(o.computed);
      r.pass = o.pass;
      r.note = std::move(o.note);
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
    }
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports_.push_back(std::move(r));
  }

  std::vector<CheckReport> take() { return std::move(reports_); }

 private:
  std::vector<CheckReport> reports_;
};

std::string join(const std::array<std::size_t, 3>& v) {
  return std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]);
}

}  // namespace

std::vector<CheckReport> klein_verify(const RunConfig& config) {
  Runner run;
  const std::string gen_path =
      config.generators_path.empty() ? data_dir() + "/klein_generators.json" : config.generators_path;
  const std::string quartic_path =
      config.quartic_path.empty() ? data_dir() + "/klein_quartic.json" : config.quartic_path;

  std::optional<MatrixGroup> group;
  std::optional<QuarticCoefficients> f;
  run.check("closure", "order 168", "derived", [&]() -> Outcome {
    try {
      group = closure(io::generators_from_json(io::read_json_file(gen_path)));
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("closure: ") + e.what());
    }
    return {"order " + std::to_string(group->order()), group->order() == 168, ""};
  });
  run.check("bundled quartic", "x0^3 x1 + x1^3 x2 + x2^3 x0", "identity", [&]() -> Outcome {
    f = io::quartic_from_json(io::read_json_file(quartic_path));
    return {io::to_json(*f)["monomials"].dump(), *f == klein_quartic(), ""};
  });
  auto need_group = [&]() -> const MatrixGroup& {
    if (!group) throw std::runtime_error("skipped: closure failed");
    return *group;
  };
  auto need_quartic = [&]() -> const QuarticCoefficients& {
    if (!f) throw std::runtime_error("skipped: quartic not loaded");
    return *f;
  };

  run.check("Q_C rank (Klein)", "6", "published", [&]() -> Outcome {
    const auto s = summarize(qc_matrix(need_quartic()));
    return {std::to_string(s.rank), s.rank == 6, ""};
  });
  run.check("Q_C determinant (Klein)", "-1/4096", "published", [&]() -> Outcome {
    const auto s = summarize(qc_matrix(need_quartic()));
    const Rational scaled = s.det * pow(Rational(12), 6);
    return {s.det.str(), s.det == Rational(-1, 4096), "times 12^6: " + scaled.str()};
  });
  run.check("Q_C rank (Fermat)", "3", "derived", [&]() -> Outcome {
    const auto s = summarize(qc_matrix(fermat_quartic()));
    return {std::to_string(s.rank), s.rank == 3, ""};
  });
  run.check("quartic invariance", "f o g = f for all g", "derived", [&]() -> Outcome {
    const auto cert = preserves_quartic(need_group(), need_quartic());
    std::size_t ones = 0;
    for (const auto& s : cert.scalars)
      if (s && *s == Cyclo7(1)) ++ones;
    return {std::to_string(ones) + "/" + std::to_string(cert.scalars.size()) + " with scalar 1",
            cert.preserved && cert.all_scalars_one(), ""};
  });
  run.check("det g = 1", "all elements", "published", [&]() -> Outcome {
    const auto& g = need_group();
    std::size_t ones = 0;
    for (const auto& h : g.elements())
      if (determinant(h) == Cyclo7(1)) ++ones;
    return {std::to_string(ones) + "/" + std::to_string(g.order()), ones == g.order(), ""};
  });
  for (const auto& [m, expected] : {std::pair{Module::B, 0UL}, {Module::S2A_detB, 0UL}, {Module::S4B, 1UL}}) {
    run.check("trivial multiplicity " + module_name(m), std::to_string(expected), "published", [&]() -> Outcome {
      const auto k = trivial_multiplicity(need_group(), m);
      return {std::to_string(k), k == expected, ""};
    });
  }
  for (Module m : {Module::B, Module::S2A_detB}) {
    run.check("character norm " + module_name(m), "1", "derived", [&]() -> Outcome {
      const Rational n = character_norm(need_group(), m);
      return {n.str(), n == Rational(1), ""};
    });
  }
  run.check("invariant line in S4B", "proportional to f", "published", [&]() -> Outcome {
    const auto basis = invariant_subspace(need_group(), Module::S4B);
    if (basis.cols() != 1) return {"dimension " + std::to_string(basis.cols()), false, ""};
    const auto c = proportionality_factor(basis, quartic_vector(need_quartic()));
    return {c ? "multiple " + c->str() : "not proportional", c.has_value(), ""};
  });
  (void)config;
  return run.take();
}

namespace {

Matrix<Rational> random_invertible(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  for (;;) {
    Matrix<Rational> g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g(i, j) = Rational(num(rng), den(rng));
    if (!determinant(g).is_zero()) return g;
  }
}

}  // namespace

std::vector<CheckReport> coho_verify(const RunConfig& config) {
  Runner run;
  const GGContext ctx;
  const std::array<std::array<std::size_t, 3>, 3> dims = {{{6, 36, 15}, {1, 36, 90}, {0, 6, 90}}};
  const std::array<std::array<std::size_t, 3>, 3> homology = {{{0, 15, 0}, {0, 0, 55}, {0, 0, 84}}};
  std::array<std::optional<GGComplex>, 3> complexes;

  for (int p = 0; p < 3; ++p) {
    run.check("term dims p=" + std::to_string(p), join(dims[p]), "derived", [&]() -> Outcome {
      complexes[p] = build_complex(ctx, p);
      const auto d = complexes[p]->term_dims();
      return {join(d), d == dims[p], ""};
    });
    run.check("d o d = 0 p=" + std::to_string(p), "zero", "identity", [&]() -> Outcome {
      if (!complexes[p]) throw std::runtime_error("skipped: complex not built");
      const auto& c = *complexes[p];
      const bool zero = (c.differentials[1].matrix * c.differentials[0].matrix).is_zero();
      return {zero ? "zero" : "nonzero", zero, ""};
    });
    run.check("homology p=" + std::to_string(p), join(homology[p]), p == 0 ? "published" : "derived",
              [&]() -> Outcome {
                if (!complexes[p]) throw std::runtime_error("skipped: complex not built");
                const auto h = homology_dims(*complexes[p]);
                return {join(h), h == homology[p], p == 0 ? "" : "H^0 = H^1 = 0"};
              });
  }
  run.check("nabla theta = 0", "zero", "identity", [&]() -> Outcome {
    const bool zero = (ctx.nabla_wedge(2) * ctx.theta()).is_zero();
    return {zero ? "zero" : "nonzero", zero, ""};
  });
  std::optional<CocycleSpaces> cs;
  run.check("cocycle dim", "21", "published", [&]() -> Outcome {
    if (!complexes[0]) throw std::runtime_error("skipped: complex not built");
    cs = cocycle_spaces(*complexes[0]);
    return {std::to_string(cs->cocycle_dim), cs->cocycle_dim == 21, ""};
  });
  run.check("coboundary dim", "6", "published", [&]() -> Outcome {
    if (!cs) throw std::runtime_error("skipped: cocycles not computed");
    return {std::to_string(cs->coboundary_dim), cs->coboundary_dim == 6, ""};
  });
  run.check("cocycle forms symmetric", "all 21", "derived", [&]() -> Outcome {
    if (!cs) throw std::runtime_error("skipped: cocycles not computed");
    std::size_t sym = 0;
    for (std::size_t k = 0; k < cs->cocycles.cols(); ++k)
      if (cocycle_to_form(ctx, cs->cocycles.column(k)).symmetric) ++sym;
    return {std::to_string(sym) + "/" + std::to_string(cs->cocycles.cols()), sym == cs->cocycles.cols(), ""};
  });
  run.check("GL(B)-equivariance", std::to_string(config.trials) + " random trials", "derived", [&]() -> Outcome {
    std::mt19937_64 rng(config.seed);
    std::size_t ok = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const auto g = random_invertible(rng);
      bool good = true;
      for (int p = 0; p < 3 && good; ++p) {
        if (!complexes[p]) throw std::runtime_error("skipped: complex not built");
        const auto& c = *complexes[p];
        const std::array<Matrix<Rational>, 3> act = {term_action(ctx, c, 0, g), term_action(ctx, c, 1, g),
                                                     term_action(ctx, c, 2, g)};
        for (std::size_t j = 0; j < 2 && good; ++j)
          good = c.differentials[j].matrix * act[j] == act[j + 1] * c.differentials[j].matrix;
      }
      if (good) ++ok;
    }
    return {std::to_string(ok) + "/" + std::to_string(config.trials), ok == config.trials && config.trials > 0, ""};
  });
  return run.take();
}

std::vector<CheckReport> chi18_verify(const RunConfig& config) {
  Runner run;
  const double eps = config.eps;
  const unsigned digits = eps < 1e-13 ? std::max(config.precision, working_digits(eps, 0)) : 0;
  const PeriodMatrix generic = generic_period_matrix();
  const PeriodMatrix diag = PeriodMatrix::diagonal_i();
  const PeriodMatrix block(Real3x3{{{0, 0, 0}, {0, 0, 0.3}, {0, 0.3, 0}}},
                           Real3x3{{{1, 0, 0}, {0, 1.2, 0.2}, {0, 0.2, 1.1}}});
  const std::vector<double> t_samples = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
  const std::string low = eps > 1e-6 ? "low precision" : "";

  run.check("even characteristics", "36 (odd 28)", "derived", [&]() -> Outcome {
    const auto e = enumerate_even().size(), o = enumerate_odd().size();
    return {std::to_string(e) + " (odd " + std::to_string(o) + ")", e == 36 && o == 28, ""};
  });
  run.check("theta_0(iI) vs 1-D product", "(pi^(1/4)/Gamma(3/4))^3 within 1e-8", "derived", [&]() -> Outcome {
    const double oracle = std::pow(std::pow(M_PI, 0.25) / std::tgamma(0.75), 3);
    const auto v = theta_constant(ThetaChar{}, diag, std::min(eps, 1e-9), digits);
    const double dev = std::abs(v.value - Complex(oracle));
    return {fmt(v.value.real()) + " (deviation " + fmt(dev) + ")", dev < 1e-8, ""};
  });
  run.check("chi18(iI) = 0", "|chi18| <= 1e-12", "identity", [&]() -> Outcome {
    const double m = std::abs(chi18(diag, eps, digits).value);
    return {fmt(m), m <= 1e-12, ""};
  });
  run.check("chi18 at 1+2 block = 0", "|chi18| <= 1e-12", "identity", [&]() -> Outcome {
    const double m = std::abs(chi18(block, eps, digits).value);
    return {fmt(m), m <= 1e-12, ""};
  });
  run.check("chi18 at generic tau", "|chi18| > 1e-8", "derived", [&]() -> Outcome {
    const auto c = chi18(generic, eps, digits);
    const double m = std::abs(c.value);
    return {fmt(m) + " +- " + fmt(c.error_bound), m > 1e-8, ""};
  });
  run.check("min theta null at generic tau", "> 1e-4", "derived", [&]() -> Outcome {
    const auto mn = min_theta_null(generic, eps, config.threshold);
    return {fmt(mn.modulus) + " at " + mn.alpha.str(), mn.modulus > 1e-4,
            mn.hyperelliptic_candidate ? "hyperelliptic candidate" : ""};
  });
  run.check("min theta null at iI", "< 1e-10", "identity", [&]() -> Outcome {
    const auto mn = min_theta_null(diag, eps, config.threshold);
    return {fmt(mn.modulus) + " at " + mn.alpha.str(), mn.modulus < 1e-10, ""};
  });
  run.check("translation by E11", "relative deviation < 1e-9", "derived", [&]() -> Outcome {
    const auto r = transform_translation(generic, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, eps);
    return {fmt(r.relative_deviation), r.relative_deviation < 1e-9, "phase " + fmt(r.phase)};
  });
  run.check("inversion", "relative deviation < 1e-6", "derived", [&]() -> Outcome {
    const auto r = transform_inversion(generic, eps);
    return {fmt(r.relative_deviation), r.relative_deviation < 1e-6, "phase " + fmt(r.phase)};
  });
  run.check("cusp slope tau11", "2 +- 0.1", "published", [&]() -> Outcome {
    const auto c = cusp_order(generic, t_samples, 0, config.precision);
    return {fmt(c.fit.slope), std::abs(c.fit.slope - 2) <= 0.1, low};
  });
  run.check("cusp slope tau22", "2 +- 0.1", "derived", [&]() -> Outcome {
    const auto c = cusp_order(generic, t_samples, 1, config.precision);
    return {fmt(c.fit.slope), std::abs(c.fit.slope - 2) <= 0.1, low};
  });
  run.check("fit control", "0 +- 0.01", "identity", [&]() -> Outcome {
    const auto c = cusp_control(generic, t_samples, config.precision);
    return {fmt(c.fit.slope), std::abs(c.fit.slope) <= 0.01, ""};
  });
  return run.take();
}

json report_json(const std::string& command, const RunConfig& config, const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) {
    json c = {{"name", r.name},
              {"expected", {{"value", r.expected}, {"provenance", r.provenance}}},
              {"computed", r.computed},
              {"pass", r.pass}};
    if (!r.note.empty()) c["note"] = r.note;
    if (config.timings) c["runtime_seconds"] = r.runtime_seconds;
    checks.push_back(std::move(c));
  }
  return {{"tool", "ceresa3"},
          {"version", tool_version()},
          {"command", command},
          {"config", config.to_json()},
          {"checks", checks},
          {"pass", all_pass(reports)}};
}

std::string report_text(const std::string& command, const RunConfig& config, const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "ceresa3 " << tool_version() << "  " << command << "  (eps " << fmt(config.eps) << ", precision "
      << config.precision << " [" << config.precision_source << "], seed " << config.seed << ")\n";
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  for (const auto& r : reports) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.computed
        << "   [expected " << r.expected << "; " << r.provenance << "]";
    if (!r.note.empty()) out << "  " << r.note;
    if (config.timings) out << "  " << fmt(r.runtime_seconds) << "s";
    out << "\n";
  }
  out << (all_pass(reports) ? "all checks passed\n" : "some checks failed\n");
  return out.str();
}

}  // namespace ceresa3
