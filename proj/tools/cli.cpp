#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "gw/gt_table.hpp"
#include "gw/mapping_torus.hpp"
#include "gw/moduli.hpp"
#include "gw/plane_curves.hpp"
#include "gw/text_io.hpp"

namespace gw::cli {

namespace {

std::vector<long> parse_csv_longs(const std::string& text, const char* what) {
  std::vector<long> values;
  if (text.empty()) return values;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stol(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " entry '" + piece + "'");
    }
  }
  return values;
}

TruncationCaps parse_caps(const std::string& text) {
  const auto v = parse_csv_longs(text, "caps");
  if (v.size() != 3)
    throw std::invalid_argument("caps must be three comma-separated budgets: euler,bidegree,contacts");
  for (long x : v)
    if (x < 0) throw std::invalid_argument("caps must be nonnegative");
  return TruncationCaps{v[0], v[1], v[2]};
}

std::string array_text(const std::vector<Rational>& coeffs) {
  std::string out = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ", ";
    out += coeffs[i].str();
  }
  return out + "]";
}

std::string rational_form_text(const Poly& num, const Poly& den) {
  if (den.is_one()) return num.str();
  const std::string top = num.degree() > 0 ? "(" + num.str() + ")" : num.str();
  return top + " / (" + den.str() + ")";
}

struct Output {
  std::ostream& out;
  bool records = false;

  void scalar(const Rational& v) { out << v.str() << "\n"; }
  void integer(long v) { out << v << "\n"; }
  void poly(const Poly& p, char var = 't') {
    if (records)
      out << array_text(p.coeffs()) << "\n";
    else
      out << p.str(var) << "\n";
  }
  void series(const Series& s, char var = 't') {
    if (records)
      out << array_text(s.coeffs()) << "\n";
    else
      out << s.str(var) << "\n";
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumerative invariants: plane-curve counts, descendant integrals,\n"
               "Lefschetz zeta / knot-surgery series, and relative-table convolution"};
  app.require_subcommand(1);

  std::string format = "human";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "records"}))
        ->capture_default_str();
  };

  // value-format checks run at parse time; semantic checks stay in the library
  const CLI::Validator int_csv(
      [](std::string& input) -> std::string {
        try {
          parse_csv_longs(input, "list");
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "INT_CSV");
  const CLI::Validator caps_csv(
      [](std::string& input) -> std::string {
        try {
          parse_caps(input);
        } catch (const std::exception& e) {
          return e.what();
        }
        return {};
      },
      "CAPS");

  std::function<void(Output&)> action;

  // kontsevich --degree D
  {
    auto* sub = app.add_subcommand("kontsevich", "rational plane curves through 3d-1 points");
    auto degree = std::make_shared<long>(0);
    sub->add_option("--degree", *degree, "curve degree")->required();
    add_format(sub);
    sub->callback([&action, degree]() {
      action = [degree](Output& o) { o.scalar(kontsevich_nd(*degree)); };
    });
  }

  // severi --degree D --nodes DELTA
  {
    auto* sub = app.add_subcommand("severi", "nodal plane curves through generic points");
    auto degree = std::make_shared<long>(0);
    auto nodes = std::make_shared<long>(0);
    sub->add_option("--degree", *degree, "curve degree")->required();
    sub->add_option("--nodes", *nodes, "number of nodes")->required();
    add_format(sub);
    sub->callback([&action, degree, nodes]() {
      action = [degree, nodes](Output& o) { o.scalar(severi_by_nodes(*degree, *nodes)); };
    });
  }

  // severi-general --degree D --genus G --alpha ... --beta ...
  {
    auto* sub = app.add_subcommand("severi-general",
                                   "generalized Severi degree with tangency conditions");
    auto degree = std::make_shared<long>(0);
    auto genus = std::make_shared<long>(0);
    auto alpha = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    sub->add_option("--degree", *degree, "curve degree")->required();
    sub->add_option("--genus", *genus, "geometric genus")->required();
    sub->add_option("--alpha", *alpha, "fixed contacts, comma-separated counts by order")
        ->check(int_csv);
    sub->add_option("--beta", *beta, "moving contacts, comma-separated counts by order")
        ->check(int_csv);
    add_format(sub);
    sub->callback([&action, degree, genus, alpha, beta]() {
      action = [degree, genus, alpha, beta](Output& o) {
        SeveriKey key{*degree, *genus, Tangency(parse_csv_longs(*alpha, "alpha")),
                      Tangency(parse_csv_longs(*beta, "beta"))};
        o.scalar(severi_general(key));
      };
    });
  }

  // bryan-leung --order N
  {
    auto* sub = app.add_subcommand("bryan-leung",
                                   "section-class series of the rational elliptic surface");
    auto order = std::make_shared<long>(0);
    sub->add_option("--order", *order, "truncation order")->required();
    add_format(sub);
    sub->callback([&action, order]() {
      action = [order](Output& o) { o.series(bryan_leung_series(*order), 'q'); };
    });
  }

  // descendant --powers a1,...,an
  {
    auto* sub = app.add_subcommand("descendant", "genus-0 descendant integral");
    auto powers = std::make_shared<std::string>();
    sub->add_option("--powers", *powers, "psi exponents, comma-separated")
        ->required()
        ->check(int_csv);
    add_format(sub);
    sub->callback([&action, powers]() {
      action = [powers](Output& o) {
        o.scalar(descendant_integral_g0(parse_csv_longs(*powers, "powers")));
      };
    });
  }

  // kappa --a A
  {
    auto* sub = app.add_subcommand("kappa", "pure kappa_a integral on the (a+3)-pointed space");
    auto a = std::make_shared<long>(0);
    sub->add_option("--a", *a, "kappa index")->required();
    add_format(sub);
    sub->callback([&action, a]() {
      action = [a](Output& o) { o.scalar(kappa_pure_integral_g0(*a)); };
    });
  }

  // dim --dimx D --c1a C --genus G --points N
  {
    auto* sub = app.add_subcommand("dim", "expected dimension of the stable-map moduli");
    auto dimx = std::make_shared<long>(0);
    auto c1a = std::make_shared<long>(0);
    auto genus = std::make_shared<long>(0);
    auto points = std::make_shared<long>(0);
    sub->add_option("--dimx", *dimx, "real dimension of the target")->required();
    sub->add_option("--c1a", *c1a, "pairing c1(TX).A")->required();
    sub->add_option("--genus", *genus, "domain genus")->required();
    sub->add_option("--points", *points, "marked points")->required();
    add_format(sub);
    sub->callback([&action, dimx, c1a, genus, points]() {
      action = [dimx, c1a, genus, points](Output& o) {
        o.integer(expected_dimension(TargetDescriptor{*dimx, *c1a}, *genus, *points));
      };
    });
  }

  // zeta --action FILE --order N
  {
    auto* sub = app.add_subcommand("zeta", "Lefschetz zeta function of a homology action");
    auto file = std::make_shared<std::string>();
    auto order = std::make_shared<long>(0);
    sub->add_option("--action", *file, "homology action file")->required();
    sub->add_option("--order", *order, "expansion order")->required();
    add_format(sub);
    sub->callback([&action, file, order]() {
      action = [file, order](Output& o) {
        const HomologyAction act = parse_homology_action(read_file(*file));
        const GromovSeriesResult zeta = lefschetz_zeta(act, *order);
        const auto [num, den] = zeta.reduced();
        const SectionClassCheck check = section_class_defined(act);
        if (o.records) {
          o.out << "numerator " << array_text(num.coeffs()) << "\n";
          o.out << "denominator " << array_text(den.coeffs()) << "\n";
          o.out << "expansion " << array_text(zeta.expansion.coeffs()) << "\n";
          o.out << "det " << check.determinant.get_str() << "\n";
        } else {
          o.out << "zeta = " << rational_form_text(num, den) << "\n";
          o.out << "expansion = " << zeta.expansion.str('t') << "\n";
          o.out << "det(I - f_*1) = " << check.determinant.get_str() << " (section class "
                << (check.defined ? "defined" : "not defined") << ")\n";
        }
      };
    });
  }

  // alexander --matrix FILE
  {
    auto* sub = app.add_subcommand("alexander", "Alexander polynomial from a monodromy matrix");
    auto file = std::make_shared<std::string>();
    sub->add_option("--matrix", *file, "monodromy matrix file")->required();
    add_format(sub);
    sub->callback([&action, file]() {
      action = [file](Output& o) {
        o.poly(alexander_from_monodromy(parse_matrix(read_file(*file))));
      };
    });
  }

  // xk-series --matrix FILE --order N
  {
    auto* sub = app.add_subcommand("xk-series",
                                   "Gromov series of the knot-surgery mapping torus");
    auto file = std::make_shared<std::string>();
    auto order = std::make_shared<long>(0);
    sub->add_option("--matrix", *file, "monodromy matrix file")->required();
    sub->add_option("--order", *order, "expansion order")->required();
    add_format(sub);
    sub->callback([&action, file, order]() {
      action = [file, order](Output& o) {
        const GromovSeriesResult r = knot_surgery_series_xk(parse_matrix(read_file(*file)), *order);
        if (o.records) {
          o.out << "numerator " << array_text(r.numerator.coeffs()) << "\n";
          o.out << "denominator " << array_text(r.denominator.coeffs()) << "\n";
          o.out << "expansion " << array_text(r.expansion.coeffs()) << "\n";
        } else {
          o.out << "numerator = " << r.numerator.str('t') << "\n";
          o.out << "denominator = " << r.denominator.str('t') << "\n";
          o.out << "expansion = " << r.expansion.str('t') << "\n";
        }
      };
    });
  }

  // enk-series --matrix FILE --n N [--order M]
  {
    auto* sub = app.add_subcommand("enk-series",
                                   "Gromov/Seiberg-Witten series of the surgered elliptic surface");
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<long>(0);
    auto order = std::make_shared<long>(-1);
    sub->add_option("--matrix", *file, "monodromy matrix file")->required();
    sub->add_option("--n", *n, "holomorphic Euler characteristic, n >= 2")->required();
    sub->add_option("--order", *order, "expansion order (default: polynomial degree)");
    add_format(sub);
    sub->callback([&action, file, n, order]() {
      action = [file, n, order](Output& o) {
        const IntMatrix m = parse_matrix(read_file(*file));
        long ord = *order;
        if (ord < 0) ord = std::max<long>(m.size() + *n - 2, 0);
        const GromovSeriesResult r = en_knot_series(m, *n, ord);
        o.poly(r.numerator);
      };
    });
  }

  // gt-exp --table FILE --caps E,B,L
  {
    auto* sub = app.add_subcommand("gt-exp",
                                   "disconnected-count table from connected counts");
    auto file = std::make_shared<std::string>();
    auto caps = std::make_shared<std::string>();
    sub->add_option("--table", *file, "connected table file")->required();
    sub->add_option("--caps", *caps, "budgets euler,bidegree,contacts")
        ->required()
        ->check(caps_csv);
    add_format(sub);
    sub->callback([&action, file, caps]() {
      action = [file, caps](Output& o) {
        const RelTable table = parse_rel_table(read_file(*file));
        o.out << rel_table_text(gt_from_gw(table, parse_caps(*caps)));
      };
    });
  }

  // gt-convolve --left FILE --right FILE [--smatrix FILE] --caps E,B,L
  {
    auto* sub = app.add_subcommand("gt-convolve", "convolution of two relative tables");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto smatrix = std::make_shared<std::string>();
    auto caps = std::make_shared<std::string>();
    sub->add_option("--left", *left, "left table file")->required();
    sub->add_option("--right", *right, "right table file")->required();
    sub->add_option("--smatrix", *smatrix, "S-matrix file (default: identity)");
    sub->add_option("--caps", *caps, "budgets euler,bidegree,contacts")
        ->required()
        ->check(caps_csv);
    add_format(sub);
    sub->callback([&action, left, right, smatrix, caps]() {
      action = [left, right, smatrix, caps](Output& o) {
        const RelTable x = parse_rel_table(read_file(*left));
        const RelTable y = parse_rel_table(read_file(*right));
        const SMatrix s =
            smatrix->empty() ? SMatrix::identity() : parse_smatrix(read_file(*smatrix));
        o.out << rel_table_text(convolve(x, s, y, parse_caps(*caps)));
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (!action) {
    err << "no subcommand selected\n";
    return 2;
  }
  try {
    Output o{out, format == "records"};
    action(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gw::cli
