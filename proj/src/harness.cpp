#include "hyp2f1/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "hyp2f1/buhring.hpp"
#include "hyp2f1/onepoint.hpp"
#include "hyp2f1/reference.hpp"
#include "hyp2f1/threepoint.hpp"
#include "hyp2f1/twopoint.hpp"

namespace hyp2f1 {

std::string_view to_string(MethodId id) noexcept {
  switch (id) {
    case MethodId::Maclaurin: return "maclaurin";
    case MethodId::EulerOracle: return "euler-oracle";
    case MethodId::Buhring: return "buhring";
    case MethodId::OnePointHalf: return "onepoint-half";
    case MethodId::OnePointW: return "onepoint-w";
    case MethodId::TwoPoint: return "twopoint";
    case MethodId::ThreePoint: return "threepoint";
  }
  return "?";
}

std::optional<MethodId> parse_method(std::string_view name) noexcept {
  for (MethodId id : {MethodId::Maclaurin, MethodId::EulerOracle, MethodId::Buhring,
                      MethodId::OnePointHalf, MethodId::OnePointW, MethodId::TwoPoint,
                      MethodId::ThreePoint}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::size_t default_terms(MethodId method) noexcept {
  switch (method) {
    case MethodId::Buhring: return 60;
    case MethodId::OnePointHalf:
    case MethodId::OnePointW: return kOnePointDefaultTerms;
    case MethodId::TwoPoint: return kTwoPointDefaultTerms;
    case MethodId::ThreePoint: return kThreePointDefaultTerms;
    case MethodId::Maclaurin: return 10000;
    case MethodId::EulerOracle: return 0;
  }
  return 0;
}

RegionVerdict method_region(MethodId method, Complex z, const MethodOptions& options) {
  switch (method) {
    case MethodId::Maclaurin: return classify_region_verdict(z, options.rho);
    case MethodId::EulerOracle: {
      const double dist = z.real() < 1.0 ? std::abs(z - 1.0) : std::abs(z.imag());
      return make_verdict(dist);
    }
    case MethodId::Buhring: return in_region_buhring(z, options.z0);
    case MethodId::OnePointHalf: return in_region_onepoint(z, {0.5, 0.0});
    case MethodId::OnePointW: return in_region_onepoint(z, options.w);
    case MethodId::TwoPoint: return in_region_twopoint(z);
    case MethodId::ThreePoint: return in_region_threepoint(z);
  }
  return {};
}

std::vector<MethodId> candidate_methods(const HypParams& params, Complex z,
                                        const MethodOptions& options) {
  if (!is_finite(z)) throw DomainError("z must be finite");
  std::vector<MethodId> out;
  if (std::abs(z) <= 0.5) out.push_back(MethodId::Maclaurin);
  const bool integral_ok = params.euler_valid();
  const bool on_cut = z.imag() == 0.0 && z.real() >= 1.0;
  if (integral_ok) {
    if (z != Complex(1.0, 0.0) && z != Complex(2.0, 0.0) && in_region_threepoint(z).inside) {
      out.push_back(MethodId::ThreePoint);
    }
    if (z != Complex(1.0, 0.0) && in_region_twopoint(z).inside) out.push_back(MethodId::TwoPoint);
    if (z.real() < 1.0) out.push_back(MethodId::OnePointHalf);
  }
  if (!near_integer(params.b() - params.a(), kIntegerDifferenceThreshold) &&
      in_region_buhring(z, options.z0).inside) {
    out.push_back(MethodId::Buhring);
  }
  if (integral_ok && !on_cut) out.push_back(MethodId::EulerOracle);
  return out;
}

MethodId select_method(const HypParams& params, Complex z, const MethodOptions& options) {
  const auto candidates = candidate_methods(params, z, options);
  if (candidates.empty()) throw NoMethodError("no evaluation route covers this (a, b, c, z)");
  return candidates.front();
}

Evaluation evaluate(const HypParams& params, Complex z, std::optional<MethodId> method,
                    const MethodOptions& options) {
  if (!method) {
    const auto candidates = candidate_methods(params, z, options);
    if (candidates.empty()) throw NoMethodError("no evaluation route covers this (a, b, c, z)");
    // The selected method can converge slowly near the edge of its region
    // at the default truncation; fall through to the next route then.
    std::optional<Evaluation> best;
    std::exception_ptr first_error;
    for (MethodId m : candidates) {
      try {
        Evaluation ev = evaluate(params, z, m, options);
        if (ev.result.converged) return ev;
        if (!best || ev.result.est_error < best->result.est_error) best = ev;
      } catch (const Error&) {
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (best) return *best;
    std::rethrow_exception(first_error);
  }
  Evaluation out;
  out.method = *method;
  const std::size_t n = options.n_terms.value_or(default_terms(out.method));
  switch (out.method) {
    case MethodId::Maclaurin:
      out.result = maclaurin(params, z, options.tol, options.n_terms.value_or(10000));
      out.in_region_margin = 1.0 - std::abs(z);
      return out;
    case MethodId::EulerOracle:
      out.result = euler_integral(params, z, options.tol);
      break;
    case MethodId::Buhring:
      out.result = buhring_eval(params, z, options.z0, n, options.tol);
      break;
    case MethodId::OnePointHalf:
      out.result = eval_onepoint_half(params, z, n, PhiMode::Recurrence, options.tol);
      break;
    case MethodId::OnePointW:
      out.result = eval_onepoint(params, z, options.w, n, PhiMode::Recurrence, options.tol);
      break;
    case MethodId::TwoPoint:
      out.result = eval_twopoint(params, z, n, options.tol);
      break;
    case MethodId::ThreePoint:
      out.result = eval_threepoint(params, z, n, PhiMode::Direct, options.tol);
      break;
  }
  out.in_region_margin = method_region(out.method, z, options).margin;
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

const Complex kExpIPi3{0.5, std::sqrt(3.0) / 2.0};

TableRow row(double a, double b, double c, Complex z, std::string label,
             std::array<double, kTableColumns> buhring,
             std::array<double, kTableColumns> featured) {
  return TableRow{a, b, c, z, std::move(label), buhring, featured};
}

}  // namespace

TableSpec table_spec(int id, bool literal_n) {
  TableSpec spec;
  spec.id = id;
  const Complex e = kExpIPi3;
  switch (id) {
    case 1:
      spec.featured = MethodId::OnePointHalf;
      spec.rows = {
          row(1.2, 2.1, 3, e, "exp(i*pi/3)", {0.263e+2, 0.879e+1, 0.103e+1, 0.955e-1, 0.803e-2},
              {0.290e+0, 0.995e-2, 0.431e-3, 0.223e-4, 0.118e-5}),
          row(1.2, 2.5, 3, e, "exp(i*pi/3)", {0.596e+1, 0.193e+1, 0.228e+0, 0.211e-1, 0.178e-2},
              {0.467e+0, 0.228e-1, 0.126e-3, 0.734e-4, 0.437e-5}),
          row(1.2, 2.1, 3, {-1, 0}, "-1", {0.155e+2, 0.330e+0, 0.248e-2, 0.148e-4, 0.796e-7},
              {0.130e+0, 0.338e-3, 0.876e-6, 0.304e-8, 0.100e-10}),
          row(1.2, 2.1, 3, {-1, 1}, "-1+i", {0.114e+2, 0.972e-1, 0.291e-3, 0.690e-6, 0.149e-8},
              {0.170e+0, 0.192e-2, 0.216e-4, 0.326e-6, 0.466e-8}),
          row(1.2, 2.1, 3.5, {-5, 0}, "-5", {0.475e+1, 0.407e-3, 0.619e-8, 0.852e-13, 0.1156e-13},
              {0.974e-2, 0.153e-2, 0.419e-3, 0.167e-4, 0.934e-5}),
      };
      break;
    case 2:
      spec.featured = MethodId::OnePointW;
      spec.w = {0.5, 0.5};
      spec.rows = {
          row(1.2, 2.1, 3, e, "exp(i*pi/3)", {0.263e+2, 0.879e+1, 0.954e-1, 0.101e+0, 0.803e-2},
              {0.408e+0, 0.606e-2, 0.156e-3, 0.476e-5, 0.150e-6}),
          row(1.2, 2.5, 3, e, "exp(i*pi/3)", {0.596e+1, 0.192e+1, 0.228e+0, 0.211e-1, 0.178e-2},
              {0.480e+0, 0.127e-1, 0.408e-3, 0.138e-4, 0.477e-6}),
          row(1.2, 2.1, 3, {-1, 0}, "-1", {0.154e+2, 0.330e+0, 0.248e-2, 0.148e-4, 0.796e-7},
              {0.400e+0, 0.267e-2, 0.300e-4, 0.430e-6, 0.677e-8}),
          row(1.2, 2.1, 3, {-1, 1}, "-1+i", {0.114e+2, 0.972e-1, 0.291e-3, 0.690e-6, 0.149e-8},
              {0.419e+0, 0.472e-2, 0.937e-4, 0.243e-5, 0.663e-7}),
          row(1.2, 2.1, 3.5, {-5, 0}, "-5", {0.475e+1, 0.407e-3, 0.619e-8, 0.852e-13, 0.156e-14},
              {0.680e+0, 0.560e-1, 0.537e-2, 0.104e-2, 0.627e-3}),
      };
      break;
    case 3:
      spec.featured = MethodId::TwoPoint;
      spec.rows = {
          row(1.2, 2.1, 3, {-1, 0}, "-1", {0.154e+2, 0.330e+0, 0.248e-2, 0.148e-4, 0.796e-7},
              {0.112e+0, 0.242e-5, 0.630e-10, 0.143e-14, 0.408e-15}),
          row(1.2, 2.5, 3, {-2, 0}, "-2", {0.181e+1, 0.294e-2, 0.175e-5, 0.805e-9, 0.339e-12},
              {0.221e+0, 0.546e-3, 0.187e-5, 0.688e-8, 0.261e-10}),
          row(1.2, 2.1, 3, e, "exp(i*pi/3)", {0.263e+2, 0.879e+1, 0.955e-1, 0.101e+0, 0.803e-2},
              {0.210e+0, 0.142e-3, 0.118e-6, 0.104e-9, 0.936e-13}),
          row(1.2, 2.5, 3, e, "exp(i*pi/3)", {0.596e+1, 0.193e+1, 0.228e+0, 0.211e-1, 0.178e-2},
              {0.141e+0, 0.753e-4, 0.603e-7, 0.522e-10, 0.467e-13}),
      };
      break;
    case 4:
      spec.featured = MethodId::ThreePoint;
      if (!literal_n) spec.term_index = {0, 3, 5, 8, 10};
      spec.rows = {
          row(1.2, 2.1, 3, e, "exp(i*pi/3)", {0.263e+2, 0.177e+2, 0.879e+1, 0.253e+1, 0.103e+1},
              {0.330e-1, 0.647e-5, 0.180e-7, 0.196e-11, 0.527e-14}),
          row(1.2, 2.5, 3, e, "exp(i*pi/3)", {0.596e+1, 0.386e+1, 0.193e+1, 0.561e+0, 0.228e-1},
              {0.351e-1, 0.496e-5, 0.137e-7, 0.184e-11, 0.523e-14}),
          row(1.2, 2.1, 3, {-5, 0}, "-5", {0.841e+0, 0.165e-2, 0.206e-4, 0.236e-7, 0.238e-9},
              {0.171e+0, 0.429e-2, 0.316e-3, 0.465e-5, 0.361e-6}),
          row(1.2, 2.01, 3, {-5, 0}, "-5", {0.269e+1, 0.700e-2, 0.860e-4, 0.966e-7, 0.973e-9},
              {0.919e-1, 0.526e-2, 0.391e-3, 0.277e-5, 0.216e-6}),
      };
      break;
    default:
      throw ConfigError("table id must be 1, 2, 3 or 4");
  }
  if (literal_n || id != 4) {
    for (std::size_t i = 0; i < kTableColumns; ++i) {
      spec.term_index[i] = static_cast<std::size_t>(spec.n_columns[i]);
    }
  }
  return spec;
}

namespace {

template <class Fn>
TableCell relative_error_cell(Complex reference, Fn&& fn) {
  TableCell cell;
  try {
    const SeriesResult r = fn();
    cell.rel_error = std::abs(r.value - reference) / std::abs(reference);
  } catch (const Error& e) {
    cell.error_label = to_string(e.kind());
  }
  return cell;
}

}  // namespace

TableResult run_table(const TableSpec& spec) {
  TableResult out;
  out.spec = spec;
  MethodOptions options;
  options.w = spec.w;
  options.z0 = spec.z0;
  for (const TableRow& r : spec.rows) {
    const HypParams params(r.a, r.b, r.c);
    const SeriesResult oracle = euler_integral(params, r.z);
    TableRowResult rr;
    rr.reference = oracle.value;
    rr.reference_est_error = oracle.est_error;
    for (std::size_t i = 0; i < kTableColumns; ++i) {
      options.n_terms = spec.term_index[i];
      rr.buhring[i] = relative_error_cell(oracle.value, [&] {
        return buhring_eval(params, r.z, spec.z0, spec.term_index[i]);
      });
      rr.featured[i] = relative_error_cell(oracle.value, [&] {
        return evaluate(params, r.z, spec.featured, options).result;
      });
    }
    out.rows.push_back(rr);
  }
  return out;
}

std::string format_mantissa_exponent(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  const char* sign = x < 0 ? "-" : "";
  double mag = std::abs(x);
  if (mag == 0.0) return "0.000E+0";
  int exponent = static_cast<int>(std::floor(std::log10(mag))) + 1;
  long digits = std::lround(mag / std::pow(10.0, exponent) * 1000.0);
  if (digits >= 1000) {
    digits = 100;
    ++exponent;
  } else if (digits < 100) {
    // log10 landed just above an exact power of ten
    digits = std::lround(mag / std::pow(10.0, exponent - 1) * 1000.0);
    --exponent;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s0.%03ldE%+d", sign, digits, exponent);
  return buf;
}

namespace {

std::string cell_text(const TableCell& cell) {
  return cell.rel_error ? format_mantissa_exponent(*cell.rel_error) : cell.error_label;
}

nlohmann::json cell_json(const TableCell& cell) {
  if (cell.rel_error) return *cell.rel_error;
  return cell.error_label;
}

}  // namespace

std::string table_to_csv(const TableResult& table) {
  std::ostringstream os;
  os << "table,row,a,b,c,z,method,kind";
  for (int n : table.spec.n_columns) os << ",n=" << n;
  os << '\n';
  const std::string featured(to_string(table.spec.featured));
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const TableRow& r = table.spec.rows[i];
    const TableRowResult& rr = table.rows[i];
    auto prefix = [&](std::string_view method, std::string_view kind) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%d,%zu,%g,%g,%g,%s,%.*s,%.*s", table.spec.id, i + 1,
                    r.a, r.b, r.c, r.z_label.c_str(), static_cast<int>(method.size()),
                    method.data(), static_cast<int>(kind.size()), kind.data());
      os << buf;
    };
    prefix("buhring", "computed");
    for (const auto& cell : rr.buhring) os << ',' << cell_text(cell);
    os << '\n';
    prefix("buhring", "reported");
    for (double v : r.reported_buhring) os << ',' << format_mantissa_exponent(v);
    os << '\n';
    prefix(featured, "computed");
    for (const auto& cell : rr.featured) os << ',' << cell_text(cell);
    os << '\n';
    prefix(featured, "reported");
    for (double v : r.reported_featured) os << ',' << format_mantissa_exponent(v);
    os << '\n';
  }
  return os.str();
}

std::string table_to_json(const TableResult& table) {
  nlohmann::json j;
  j["table"] = table.spec.id;
  j["featured_method"] = std::string(to_string(table.spec.featured));
  j["n_columns"] = table.spec.n_columns;
  j["term_index"] = table.spec.term_index;
  j["w"] = {{"re", table.spec.w.real()}, {"im", table.spec.w.imag()}};
  j["z0"] = {{"re", table.spec.z0.real()}, {"im", table.spec.z0.imag()}};
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const TableRow& r = table.spec.rows[i];
    const TableRowResult& rr = table.rows[i];
    nlohmann::json row;
    row["a"] = r.a;
    row["b"] = r.b;
    row["c"] = r.c;
    row["z"] = {{"re", r.z.real()}, {"im", r.z.imag()}, {"label", r.z_label}};
    row["reference"] = {{"re", rr.reference.real()}, {"im", rr.reference.imag()},
                        {"est_error", rr.reference_est_error}};
    nlohmann::json buh = nlohmann::json::array(), feat = nlohmann::json::array();
    for (std::size_t k = 0; k < kTableColumns; ++k) {
      buh.push_back(cell_json(rr.buhring[k]));
      feat.push_back(cell_json(rr.featured[k]));
    }
    row["buhring"] = buh;
    row["featured"] = feat;
    row["reported_buhring"] = r.reported_buhring;
    row["reported_featured"] = r.reported_featured;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Rasters

std::vector<RasterCell> region_raster(const RasterSpec& spec) {
  for (double v : {spec.xmin, spec.xmax, spec.ymin, spec.ymax}) {
    if (!std::isfinite(v)) throw ConfigError("raster bounds must be finite");
  }
  if (!(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax)) {
    throw ConfigError("raster bounds must satisfy min < max");
  }
  if (spec.res < 1 || spec.res > kMaxRasterRes) {
    throw ConfigError("raster resolution must lie in [1, 4096]");
  }
  if (spec.method == MethodId::OnePointW &&
      (spec.options.w == Complex(0.0, 0.0) || !is_finite(spec.options.w))) {
    throw ConfigError("onepoint-w raster needs a finite nonzero w");
  }
  if (spec.method == MethodId::Maclaurin &&
      !(spec.options.rho > 0.0 && spec.options.rho < 1.0)) {
    throw ConfigError("rho must lie in (0, 1)");
  }

  const std::size_t n = spec.res;
  auto coord = [n](double lo, double hi, std::size_t i) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  };
  std::vector<RasterCell> cells;
  cells.reserve(n * n);
  for (std::size_t iy = 0; iy < n; ++iy) {
    const double y = coord(spec.ymin, spec.ymax, iy);
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = coord(spec.xmin, spec.xmax, ix);
      cells.push_back({x, y, method_region(spec.method, {x, y}, spec.options)});
    }
  }
  return cells;
}

std::string raster_to_csv(const std::vector<RasterCell>& cells) {
  std::string out = "x,y,inside,margin\n";
  char buf[96];
  for (const auto& cell : cells) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%.17g\n", cell.x, cell.y,
                  cell.verdict.inside ? 1 : 0, cell.verdict.margin);
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CLI support

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("cannot parse complex number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (s.empty()) throw ConfigError("empty complex number");
  if (s == "exp(i*pi/3)") return kExpIPi3;
  if (s == "exp(-i*pi/3)") return std::conj(kExpIPi3);
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body(s.data(), s.size() - 1);
  // Split at the last sign that is not the leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, text)};
  return {parse_real(body.substr(0, split), text), parse_real(body.substr(split), text)};
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Config: return 2;
    case ErrorKind::Pole:
    case ErrorKind::IntegerDifference:
    case ErrorKind::RecurrenceBreakdown: return 4;
    case ErrorKind::Domain:
    case ErrorKind::OutsideDomain:
    case ErrorKind::ParamDomain:
    case ErrorKind::BranchCut:
    case ErrorKind::Singularity:
    case ErrorKind::NoMethod: return 3;
  }
  return 3;
}

namespace {

double rel_diff(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }

CheckResult check(std::string name, bool passed, double worst) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst=%.3e", worst);
  return {std::move(name), passed, buf};
}

}  // namespace

std::vector<CheckResult> selftest() {
  std::vector<CheckResult> out;
  const HypParams p(1.2, 2.1, 3.0);
  const Complex e = kExpIPi3;

  {
    double worst = 0.0;
    for (double r : {0.3, 0.6, 0.8}) {
      for (int k = 0; k < 8; ++k) {
        const Complex z = std::polar(r, k * std::numbers::pi / 4.0 + 0.1);
        worst = std::max(worst, rel_diff(maclaurin(p, z).value, euler_integral(p, z).value));
      }
    }
    out.push_back(check("maclaurin agrees with euler integral (|z|<=0.8)", worst <= 1e-11, worst));
  }
  {
    double worst = 0.0;
    const auto rec = phi_half_sequence(30, 2.1, 3.0);
    for (std::size_t n = 0; n <= 30; ++n) {
      const double direct = phi_half(n, 2.1, 3.0, PhiMode::Direct);
      worst = std::max(worst, std::abs(rec[n] - direct) / std::abs(direct));
    }
    out.push_back(check("onepoint moment recurrence matches closed form", worst <= 1e-10, worst));
  }
  {
    double worst = 0.0;
    const auto rec = phi3_sequence(25, 2.1, 3.0, PhiMode::Recurrence);
    const auto dir = phi3_sequence(25, 2.1, 3.0, PhiMode::Direct);
    for (std::size_t n = 0; n <= 25; ++n) {
      worst = std::max(worst, std::abs(rec.values[n] - dir.values[n]) / std::abs(dir.values[n]));
    }
    out.push_back(check("threepoint moment recurrence matches closed form", worst <= 1e-9, worst));
  }
  {
    double worst = 0.0;
    const auto rec = twopoint_coeffs_recursive(1.2, e, 20);
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto [A, B] = twopoint_coeffs_explicit(1.2, e, n);
      worst = std::max({worst, rel_diff(rec.A[n], A), rel_diff(rec.B[n], B)});
    }
    out.push_back(check("twopoint explicit and recursive coefficients agree", worst <= 1e-10, worst));
  }
  {
    const double worst = rel_diff(eval_onepoint(p, e, {0.5, 0.0}, 20).value,
                                  eval_onepoint_half(p, e, 20).value);
    out.push_back(check("onepoint w=1/2 generic path matches half path", worst <= 1e-14, worst));
  }
  {
    bool ok = true;
    for (Complex z : {e, std::conj(e)}) {
      ok = ok && in_region_onepoint(z, {0.5, 0.0}).inside && in_region_twopoint(z).inside &&
           in_region_threepoint(z).inside;
      for (double rho : {0.9, 0.95, 0.99}) ok = ok && classify_region(z, rho).empty();
    }
    out.push_back({"exp(+-i*pi/3) inside new regions, outside classical ones", ok, ""});
  }
  {
    const Complex z{-0.7, 0.9};
    const double worst =
        std::max(rel_diff(std::conj(euler_integral(p, z).value), euler_integral(p, std::conj(z)).value),
                 rel_diff(std::conj(eval_threepoint(p, z).value), eval_threepoint(p, std::conj(z)).value));
    out.push_back(check("conjugate symmetry", worst <= 1e-13, worst));
  }
  {
    const double worst = rel_diff(buhring_eval(p, e, {0.5, 0.0}, 20).value,
                                  buhring_eval(p.swapped(), e, {0.5, 0.0}, 20).value);
    out.push_back(check("buhring invariant under a <-> b", worst <= 1e-12, worst));
  }
  {
    const auto table = run_table(table_spec(1));
    const double err = table.rows[0].featured[4].rel_error.value_or(1.0);
    const bool ok = err <= 10 * 0.118e-5 && err >= 0.118e-5 / 10;
    out.push_back(check("table 1 row 1 onepoint-half n=20 within 10x of 0.118E-5", ok, err));
  }
  return out;
}

}  // namespace hyp2f1
