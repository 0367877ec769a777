#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "definetti/geometry.hpp"
#include "definetti/lr_rule.hpp"
#include "definetti/tensor_oracle.hpp"
#include "definetti/util.hpp"
#include "definetti/verify.hpp"
#include "definetti/werner.hpp"
#include "json.hpp"

namespace definetti::cli {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit_scalar(std::ostream& out, const std::string& format, const std::string& value) {
  if (format == "json") {
    nlohmann::json j;
    j["value"] = value;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "value\n" << csv_quote(value) << "\n";
  } else {
    out << value << "\n";
  }
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

void emit_pairs(std::ostream& out, const std::string& format, const Pairs& rows) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : rows) j[key] = value;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "name,value\n";
    for (const auto& [key, value] : rows) out << csv_quote(key) << "," << csv_quote(value) << "\n";
  } else {
    for (const auto& [key, value] : rows) out << key << " = " << value << "\n";
  }
}

void emit_werner(std::ostream& out, const std::string& format, const WernerState& w) {
  if (format == "json") {
    out << werner_to_json(w) << "\n";
  } else if (format == "csv") {
    out << "partition,weight\n";
    for (size_t i = 0; i < w.index.size(); ++i)
      out << csv_quote(w.index[i].to_string()) << "," << rational_str(w.weights[i]) << "\n";
  } else {
    for (size_t i = 0; i < w.index.size(); ++i)
      out << w.index[i].to_string() << " " << rational_str(w.weights[i]) << "\n";
  }
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  if (csv.empty()) return out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(std::stol(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

Spectrum padded_state(const std::string& csv, int d) {
  Spectrum r = parse_spectrum(csv);
  if (static_cast<int>(r.size()) > d) throw std::invalid_argument("spectrum longer than d");
  r.resize(static_cast<size_t>(d), Rational(0));
  if (!is_state_spectrum(r)) throw std::invalid_argument("spectrum must be nonnegative and sum to 1");
  return r;
}

std::pair<Partition, Partition> parse_coords(const std::string& s) {
  size_t pos = s.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("coords must be two comma lists separated by ':'");
  return {Partition::parse(s.substr(0, pos)), Partition::parse(s.substr(pos + 1))};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Werner-state reductions, de Finetti bounds, and figure data", "definetti"};
  app.require_subcommand(1);

  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  int exit_code = 0;

  auto* sc_partitions = app.add_subcommand("partitions", "list Par(k,d), reverse-lexicographic");
  int par_k = 0, par_d = 0;
  sc_partitions->add_option("--k", par_k, "box count")->required();
  sc_partitions->add_option("--d", par_d, "row bound (default: k)");
  sc_partitions->callback([&] {
    int d = sc_partitions->count("--d") ? par_d : std::max(par_k, 1);
    auto list = enumerate_partitions(par_k, d);
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& la : list) j.push_back(la.rows());
      out << j.dump() << "\n";
    } else if (format == "csv") {
      out << "partition\n";
      for (const auto& la : list) out << csv_quote(la.to_string()) << "\n";
    } else {
      for (const auto& la : list) out << la.to_string() << "\n";
    }
  });

  auto* sc_dims = app.add_subcommand("dims", "irrep dimensions of a diagram");
  std::string dims_lambda;
  int dims_d = 0;
  sc_dims->add_option("--lambda", dims_lambda, "diagram, comma list")->required();
  sc_dims->add_option("--d", dims_d, "local dimension for the unitary side");
  sc_dims->callback([&] {
    Partition la = Partition::parse(dims_lambda);
    Pairs rows;
    rows.emplace_back("dim_sn", dim_sn(la).get_str());
    if (sc_dims->count("--d")) rows.emplace_back("dim_ud", dim_ud(la, dims_d).get_str());
    emit_pairs(out, format, rows);
  });

  auto* sc_schur = app.add_subcommand("schur", "schur polynomial at a rational point");
  std::string schur_mu, schur_x;
  sc_schur->add_option("--mu", schur_mu, "shape, comma list")->required();
  sc_schur->add_option("--x", schur_x, "point, comma list of rationals")->required();
  sc_schur->callback([&] {
    emit_scalar(out, format,
                rational_str(schur_eval(Partition::parse(schur_mu), parse_spectrum(schur_x))));
  });

  auto* sc_sschur = app.add_subcommand("sschur", "shifted schur polynomial at an integer vector");
  std::string ss_mu, ss_lambda;
  sc_sschur->add_option("--mu", ss_mu, "shape, comma list")->required();
  sc_sschur->add_option("--lambda", ss_lambda, "integer vector, comma list, order preserved")
      ->required();
  sc_sschur->callback([&] {
    emit_scalar(out, format,
                shifted_schur_eval(Partition::parse(ss_mu), parse_longs(ss_lambda)).get_str());
  });

  auto* sc_kostka = app.add_subcommand("kostka", "kostka matrix on Par(k,d), or its inverse");
  int kos_k = 0, kos_d = 0;
  bool kos_inverse = false;
  sc_kostka->add_option("--k", kos_k, "box count")->required();
  sc_kostka->add_option("--d", kos_d, "row bound")->required();
  sc_kostka->add_flag("--inverse", kos_inverse, "emit the inverse transition instead");
  sc_kostka->callback([&] {
    KostkaMatrix km = kostka_matrix(kos_k, kos_d);
    size_t m = km.index.size();
    auto entry = [&](size_t i, size_t j) {
      return kos_inverse ? rational_str(km.inverse[i][j]) : km.kostka[i][j].get_str();
    };
    if (format == "json") {
      nlohmann::json j;
      j["k"] = kos_k;
      j["d"] = kos_d;
      j["index"] = nlohmann::json::array();
      for (const auto& la : km.index) j["index"].push_back(la.rows());
      nlohmann::json rows = nlohmann::json::array();
      for (size_t i = 0; i < m; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t jx = 0; jx < m; ++jx) row.push_back(entry(i, jx));
        rows.push_back(std::move(row));
      }
      j[kos_inverse ? "inverse" : "kostka"] = std::move(rows);
      out << j.dump() << "\n";
    } else if (format == "csv") {
      out << "shape";
      for (const auto& la : km.index) out << "," << csv_quote(la.to_string());
      out << "\n";
      for (size_t i = 0; i < m; ++i) {
        out << csv_quote(km.index[i].to_string());
        for (size_t jx = 0; jx < m; ++jx) out << "," << entry(i, jx);
        out << "\n";
      }
    } else {
      for (size_t i = 0; i < m; ++i) {
        out << km.index[i].to_string() << ":";
        for (size_t jx = 0; jx < m; ++jx) out << " " << entry(i, jx);
        out << "\n";
      }
    }
  });

  auto* sc_lr = app.add_subcommand("lr", "littlewood-richardson coefficient");
  std::string lr_la, lr_mu, lr_nu;
  sc_lr->add_option("--lambda", lr_la, "outer shape")->required();
  sc_lr->add_option("--mu", lr_mu, "first factor")->required();
  sc_lr->add_option("--nu", lr_nu, "second factor")->required();
  sc_lr->callback([&] {
    emit_scalar(out, format,
                lr_coefficient(Partition::parse(lr_la), Partition::parse(lr_mu),
                               Partition::parse(lr_nu))
                    .get_str());
  });

  auto* sc_ptrace = app.add_subcommand("ptrace", "block weights of the k-system reduction");
  std::string pt_lambda, pt_route = "shifted";
  int pt_n = -1, pt_k = 0, pt_d = 0;
  sc_ptrace->add_option("--lambda", pt_lambda, "diagram on n systems")->required();
  sc_ptrace->add_option("--n", pt_n, "system count (default: box count of lambda)");
  sc_ptrace->add_option("--k", pt_k, "systems kept")->required();
  sc_ptrace->add_option("--d", pt_d, "local dimension")->required();
  sc_ptrace->add_option("--route", pt_route, "evaluation route")
      ->check(CLI::IsMember({"shifted", "lr", "oracle"}));
  sc_ptrace->callback([&] {
    Partition la = Partition::parse(pt_lambda);
    int n = sc_ptrace->count("--n") ? pt_n : la.total();
    if (n != la.total()) throw std::invalid_argument("n must equal the box count of lambda");
    WernerState w = pt_route == "lr"       ? partial_trace_coeffs_lr(la, n, pt_k, pt_d)
                    : pt_route == "oracle" ? oracle_partial_trace_coeffs(la, n, pt_k, pt_d)
                                           : partial_trace_coeffs_shifted(la, n, pt_k, pt_d);
    emit_werner(out, format, w);
  });

  auto* sc_twirl = app.add_subcommand("twirl", "block weights of the twirled product state");
  std::string tw_r;
  int tw_k = 0, tw_d = 0;
  sc_twirl->add_option("--r", tw_r, "spectrum, comma list of rationals")->required();
  sc_twirl->add_option("--k", tw_k, "system count")->required();
  sc_twirl->add_option("--d", tw_d, "local dimension")->required();
  sc_twirl->callback(
      [&] { emit_werner(out, format, twirled_product(padded_state(tw_r, tw_d), tw_k, tw_d)); });

  auto* sc_distance = app.add_subcommand("distance", "distance from a reduction to one twirled product");
  std::string di_lambda, di_r;
  int di_n = -1, di_k = 0;
  sc_distance->add_option("--lambda", di_lambda, "diagram on n systems")->required();
  sc_distance->add_option("--n", di_n, "system count (default: box count of lambda)");
  sc_distance->add_option("--k", di_k, "systems kept")->required();
  sc_distance->add_option("--r", di_r, "comparison spectrum; its length sets d")->required();
  sc_distance->callback([&] {
    Partition la = Partition::parse(di_lambda);
    int n = sc_distance->count("--n") ? di_n : la.total();
    if (n != la.total()) throw std::invalid_argument("n must equal the box count of lambda");
    emit_scalar(out, format, rational_str(distance_to_twirled(la, n, di_k, parse_spectrum(di_r))));
  });

  auto* sc_mindist = app.add_subcommand("mindist", "grid minimum of the distance to twirled products");
  std::string mi_lambda;
  int mi_n = -1, mi_k = 0, mi_d = 0, mi_res = 100;
  sc_mindist->add_option("--lambda", mi_lambda, "diagram on n systems")->required();
  sc_mindist->add_option("--n", mi_n, "system count (default: box count of lambda)");
  sc_mindist->add_option("--k", mi_k, "systems kept")->required();
  sc_mindist->add_option("--d", mi_d, "local dimension")->required();
  sc_mindist->add_option("--resolution", mi_res, "simplex grid resolution");
  sc_mindist->callback([&] {
    Partition la = Partition::parse(mi_lambda);
    int n = sc_mindist->count("--n") ? mi_n : la.total();
    if (n != la.total()) throw std::invalid_argument("n must equal the box count of lambda");
    GridMinimum g = min_distance_grid(la, n, mi_k, mi_d, mi_res);
    emit_pairs(out, format, {{"argmin", spectrum_str(g.argmin)}, {"value", rational_str(g.value)}});
  });

  auto* sc_bounds = app.add_subcommand("bounds", "de finetti bound values");
  int bo_n = 0, bo_k = 0, bo_d = 0;
  std::string bo_mu, bo_nu, bo_alpha;
  sc_bounds->add_option("--n", bo_n, "system count")->required();
  sc_bounds->add_option("--k", bo_k, "systems kept")->required();
  sc_bounds->add_option("--d", bo_d, "local dimension")->required();
  sc_bounds->add_option("--mu", bo_mu, "kept highest weight (with --nu: coherent bound)");
  sc_bounds->add_option("--nu", bo_nu, "traced highest weight");
  sc_bounds->add_option("--alpha", bo_alpha, "rational in (0,1/2) for the classical integral");
  sc_bounds->callback([&] {
    Pairs rows;
    if (sc_bounds->count("--mu") != sc_bounds->count("--nu"))
      throw std::invalid_argument("--mu and --nu must be given together");
    if (sc_bounds->count("--mu"))
      rows.emplace_back("eps_coherent", rational_str(eps_coherent(Partition::parse(bo_mu),
                                                                  Partition::parse(bo_nu), bo_d)));
    rows.emplace_back("eps_symmetric", rational_str(eps_symmetric(bo_n, bo_k, bo_d)));
    rows.emplace_back("eps_mixed", rational_str(eps_mixed(bo_n, bo_k, bo_d)));
    rows.emplace_back("eps_classical", rational_str(eps_classical(bo_n, bo_k, bo_d)));
    if (sc_bounds->count("--alpha"))
      rows.emplace_back("df_phi", fmt_double(df_phi(parse_rational(bo_alpha))));
    emit_pairs(out, format, rows);
  });

  auto* sc_lower = app.add_subcommand("lower-bound", "rectangular-diagram lower bound, k = 2");
  int lo_d = 0, lo_m = 0, lo_k = 2;
  sc_lower->add_option("--d", lo_d, "local dimension (>= 3)")->required();
  sc_lower->add_option("--m", lo_m, "rectangle width; n = m d")->required();
  sc_lower->add_option("--k", lo_k, "systems kept (must be 2)");
  sc_lower->callback([&] {
    BoundReport r = lower_bound_antisym(lo_d, lo_m, lo_k);
    emit_pairs(out, format,
               {{"distance", rational_str(r.exact_distance)},
                {"bound", rational_str(r.bound_value)},
                {"satisfied", r.satisfied ? "true" : "false"}});
  });

  auto* sc_exchange = app.add_subcommand("exchange", "distance between reductions along a fixed shape");
  std::string ex_shape;
  int ex_n = 0, ex_m = 0, ex_k = 0;
  sc_exchange->add_option("--shape", ex_shape, "normalized shape, comma list of rationals")
      ->required();
  sc_exchange->add_option("--n", ex_n, "smaller system count")->required();
  sc_exchange->add_option("--m", ex_m, "larger system count")->required();
  sc_exchange->add_option("--k", ex_k, "systems kept")->required();
  sc_exchange->callback([&] {
    emit_scalar(out, format,
                rational_str(exchange_distance(parse_spectrum(ex_shape), ex_n, ex_m, ex_k)));
  });

  auto* sc_gap = app.add_subcommand("gap", "constructed-mixture gap for a random symmetric state");
  int ga_n = 0, ga_k = 0, ga_d = 0;
  unsigned ga_seed = 0;
  sc_gap->add_option("--n", ga_n, "system count")->required();
  sc_gap->add_option("--k", ga_k, "systems kept")->required();
  sc_gap->add_option("--d", ga_d, "local dimension")->required();
  sc_gap->add_option("--seed", ga_seed, "state seed");
  sc_gap->callback([&] {
    MixtureGap g = symmetric_mixture_gap(random_symmetric_state(ga_n, ga_d, ga_seed), ga_n, ga_d, ga_k);
    emit_pairs(out, format,
               {{"gap", fmt_double(g.gap)},
                {"bound", rational_str(g.bound)},
                {"min_eigenvalue", fmt_double(g.min_eigenvalue)},
                {"trace_error", fmt_double(g.trace_error)},
                {"perm_deviation", fmt_double(g.perm_deviation)}});
  });

  auto* sc_figure = app.add_subcommand("figure", "csv data for the three experiment figures");
  std::string fig_which, fig_coords;
  int fig_n = -1, fig_k = -1, fig_d = -1, fig_res = -1;
  bool fig_hull = false;
  sc_figure->add_option("--which", fig_which, "figure family")
      ->required()
      ->check(CLI::IsMember({"scheme", "polytope", "striations"}));
  sc_figure->add_option("--n", fig_n, "box count (striations only; default 60)");
  sc_figure->add_option("--k", fig_k, "systems kept");
  sc_figure->add_option("--d", fig_d, "local dimension");
  sc_figure->add_option("--resolution", fig_res, "grid resolution (default 60, or 30 when d > 3)");
  sc_figure->add_option("--coords", fig_coords, "projection labels, e.g. 1,1,1:2,1");
  sc_figure->add_flag("--hull", fig_hull, "emit the convex hull instead of the cloud");
  sc_figure->callback([&] {
    int k = fig_k, d = fig_d, n = fig_n;
    if (k < 0) k = fig_which == "scheme" ? 3 : 4;
    if (d < 0) d = fig_which == "striations" ? 5 : 3;
    if (n < 0) n = 60;
    Partition c1, c2;
    if (sc_figure->count("--coords")) {
      std::tie(c1, c2) = parse_coords(fig_coords);
    } else if (k == 3 && d == 3) {
      c1 = Partition({1, 1, 1});
      c2 = Partition({2, 1});
    } else if (k == 4) {
      c1 = Partition({4});
      c2 = Partition({2, 2});
    } else {
      auto index = enumerate_partitions(k, d);
      if (index.size() < 2) throw std::invalid_argument("figure: fewer than two block labels");
      c1 = index[0];
      c2 = index[1];
    }
    int res = fig_res > 0 ? fig_res : (d <= 3 ? 60 : 30);
    ProjectedCloud cloud = fig_which == "striations" ? striations_data(n, k, d, c1, c2)
                                                     : fk_image(k, d, res, c1, c2);
    if (fig_hull) {
      std::vector<std::pair<Rational, Rational>> pts;
      pts.reserve(cloud.points.size());
      for (const auto& p : cloud.points) pts.emplace_back(p.x, p.y);
      write_hull_csv(out, convex_hull_2d(std::move(pts)));
    } else {
      write_csv(out, cloud);
    }
  });

  auto* sc_verify = app.add_subcommand("verify", "run the full cross-check suite");
  sc_verify->callback([&] {
    auto results = run_verification();
    long failures = 0;
    for (const auto& r : results)
      if (!r.pass) ++failures;
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : results)
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      out << j.dump() << "\n";
    } else if (format == "csv") {
      out << "status,name,detail\n";
      for (const auto& r : results)
        out << (r.pass ? "ok" : "FAIL") << "," << csv_quote(r.name) << "," << csv_quote(r.detail)
            << "\n";
    } else {
      for (const auto& r : results)
        out << (r.pass ? "ok   " : "FAIL ") << r.name << " (" << r.detail << ")\n";
      out << results.size() << " checks, " << failures << " failures\n";
    }
    if (failures > 0) exit_code = 4;
  });

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const size_cap_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const verification_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // Internal cross-assertions double as verification failures.
    err << "verification failure: " << e.what() << "\n";
    return 4;
  }
  return exit_code;
}

}  // namespace definetti::cli
