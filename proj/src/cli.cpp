#include "wonderlat/cli.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "wonderlat/datum_io.hpp"
#include "wonderlat/lattice.hpp"
#include "wonderlat/limit.hpp"
#include "wonderlat/reducibility.hpp"

namespace wonderlat {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { human, json, tsv };

struct DatumOptions {
  std::string type;
  int rank = 0;
  std::string datum_path;
  std::string subvariety;
  bool closed_orbit = false;
};

struct Common {
  bool json = false;
  bool tsv = false;

  Format format() const { return json ? Format::json : tsv ? Format::tsv : Format::human; }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Integer parse_integer(const std::string& text) {
  std::size_t used = 0;
  Integer value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  return value;
}

IntVector parse_int_list(const std::string& text) {
  const auto items = split(text, ',');
  IntVector v(static_cast<Eigen::Index>(items.size()));
  for (std::size_t k = 0; k < items.size(); ++k) v(static_cast<Eigen::Index>(k)) = parse_integer(items[k]);
  return v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(static_cast<int>(parse_integer(item)) - 1);
  return out;
}

ojson rational_json(const Rational& q) {
  if (is_integral(q)) return q.numerator();
  return format(q);
}

template <typename Derived>
ojson vector_json(const Eigen::MatrixBase<Derived>& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<typename Derived::Scalar, Rational>) {
      out.push_back(rational_json(v(i)));
    } else {
      out.push_back(v(i));
    }
  }
  return out;
}

ojson index_json(const std::vector<int>& v) {
  ojson out = ojson::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::string root_name(const SphericalDatum& d, int root) {
  if (d.group_based() && root >= d.top_rank) return "beta" + std::to_string(root - d.top_rank + 1);
  return "alpha" + std::to_string(root + 1);
}

std::string weight_symbol(const SphericalDatum& d, int root) {
  if (d.group_based() && root >= d.top_rank) return "zeta" + std::to_string(root - d.top_rank + 1);
  return "omega" + std::to_string(root + 1);
}

std::string combination(const IntVector& v, const std::function<std::string(int)>& name) {
  std::string out;
  for (int k = 0; k < v.size(); ++k) {
    if (v(k) == 0) continue;
    if (!out.empty()) out += v(k) > 0 ? "+" : "-";
    else if (v(k) < 0) out += "-";
    const Integer a = v(k) < 0 ? -v(k) : v(k);
    if (a != 1) out += std::to_string(a) + "*";
    out += name(k);
  }
  return out.empty() ? "0" : out;
}

std::string labels_text(const std::vector<int>& v, const std::function<std::string(int)>& name) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + name(x);
  return out.empty() ? "-" : out;
}

std::string datum_name(const SphericalDatum& d) {
  std::string name = d.group_type ? d.group_type->name() : d.root_system.dynkin.name();
  if (!d.removed.empty()) {
    name += " X_{" + labels_text(d.removed, [](int x) { return std::to_string(x + 1); }) + "}";
  }
  return name;
}

void add_datum_options(CLI::App* sub, DatumOptions& opts, bool strata) {
  sub->add_option("--type", opts.type, "Dynkin series (with --rank) or full type such as A3 or G2xA1");
  sub->add_option("--rank", opts.rank, "rank of a simple group type")->check(CLI::PositiveNumber);
  sub->add_option("--datum", opts.datum_path, "datum file (JSON)");
  if (strata) {
    sub->add_option("--subvariety", opts.subvariety, "boundary labels I (1-based, comma-separated) of X_I");
    sub->add_flag("--closed-orbit", opts.closed_orbit, "use the closed orbit");
  }
}

void add_format_options(CLI::App* sub, Common& common) {
  auto* json = sub->add_flag("--json", common.json, "JSON output");
  sub->add_flag("--tsv", common.tsv, "TSV output")->excludes(json);
}

DatumPtr resolve_datum(const DatumOptions& opts) {
  DatumPtr datum;
  if (!opts.datum_path.empty()) {
    if (!opts.type.empty() || opts.rank != 0) {
      throw Error(ErrorCode::InvalidArgument, "--datum cannot be combined with --type/--rank");
    }
    datum = load_datum(opts.datum_path);
  } else if (!opts.type.empty()) {
    std::string text = opts.type;
    if (opts.rank != 0) text += std::to_string(opts.rank);
    datum = group_datum(DynkinType::parse(text));
  } else {
    throw Error(ErrorCode::InvalidArgument, "one of --type or --datum is required");
  }
  if (opts.closed_orbit) return closed_orbit_datum(datum);
  return subvariety_datum(datum, parse_labels(opts.subvariety));
}

CurveClass parse_curve(const DatumPtr& datum, const std::string& text) {
  return make_curve(datum, parse_int_list(text));
}

ojson basis_json(const SphericalDatum& d) {
  ojson out = ojson::array();
  for (const auto& id : d.basis_ids()) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------- describe

ojson describe_json(const DatumPtr& datum) {
  const auto& d = *datum;
  auto rname = [&](int k) { return root_name(d, k); };
  auto wname = [&](int k) { return weight_symbol(d, k); };
  ojson out;
  out["datum"] = datum_name(d);
  out["kind"] = to_string(d.kind);
  out["dynkin"] = d.root_system.dynkin.name();
  if (d.group_type) out["group_type"] = d.group_type->name();
  out["rank"] = d.rank();
  out["picard_rank"] = d.picard_rank();
  out["s_p"] = index_json(d.s_p);
  out["removed"] = index_json(d.removed);
  ojson levi = ojson::array();
  for (int root : d.levi_roots) levi.push_back(rname(root));
  out["levi_roots"] = levi;

  ojson roots = ojson::array();
  for (int k = 0; k < d.rank(); ++k) {
    roots.push_back({{"label", d.labels[k] + 1},
                     {"root", vector_json(d.spherical_roots[k])},
                     {"name", combination(d.spherical_roots[k], rname)}});
  }
  out["spherical_roots"] = roots;

  ojson colors = ojson::array();
  for (const auto& color : d.colors) {
    ojson moved = ojson::array();
    for (int root : color.moved_by) moved.push_back(rname(root));
    ojson c{{"id", color.id}, {"moved_by", moved}, {"type", to_string(color.type)}};
    if (color.weight) {
      c["weight"] = vector_json(*color.weight);
      c["weight_name"] = combination(*color.weight, wname);
    } else {
      c["weight"] = nullptr;
      c["weight_name"] = nullptr;
    }
    colors.push_back(c);
  }
  out["colors"] = colors;

  ojson extras = ojson::array();
  for (const auto& extra : d.schubert_extras) {
    extras.push_back({{"id", extra.id},
                      {"moving_root", rname(extra.moving_root)},
                      {"label", extra.label + 1},
                      {"weight", vector_json(extra.weight)},
                      {"weight_name", combination(extra.weight, wname)}});
  }
  out["schubert_extras"] = extras;

  ojson types = ojson::array();
  const auto ct = classify_color_types(d);
  for (int root = 0; root < d.root_system.rank(); ++root) {
    types.push_back({{"root", rname(root)}, {"type", to_string(ct[root])}});
  }
  out["color_types"] = types;

  out["basis"] = basis_json(d);
  ojson boundary = ojson::array();
  const RatMatrix m = boundary_matrix(datum);
  for (int k = 0; k < d.rank(); ++k) {
    boundary.push_back({{"label", d.labels[k] + 1}, {"expansion", vector_json(m.row(k).transpose())}});
  }
  out["boundary"] = boundary;
  return out;
}

void print_describe(const ojson& j, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << j.dump(2) << "\n";
    return;
  }
  auto str = [](const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto list = [&](const ojson& arr) {
    std::string s;
    for (const auto& x : arr) s += (s.empty() ? "" : ",") + str(x);
    return s.empty() ? std::string("-") : s;
  };
  if (fmt == Format::tsv) {
    out << "field\tkey\tvalue\n";
    out << "datum\t\t" << str(j["datum"]) << "\n";
    out << "kind\t\t" << str(j["kind"]) << "\n";
    out << "dynkin\t\t" << str(j["dynkin"]) << "\n";
    out << "rank\t\t" << j["rank"] << "\n";
    out << "picard_rank\t\t" << j["picard_rank"] << "\n";
    out << "s_p\t\t" << list(j["s_p"]) << "\n";
    for (const auto& r : j["spherical_roots"]) out << "spherical_root\t" << r["label"] << "\t" << str(r["name"]) << "\n";
    for (const auto& c : j["colors"]) {
      out << "color\t" << str(c["id"]) << "\t" << list(c["moved_by"]) << ";" << str(c["type"]) << ";"
          << (c["weight_name"].is_null() ? "-" : str(c["weight_name"])) << "\n";
    }
    for (const auto& e : j["schubert_extras"]) {
      out << "schubert\t" << str(e["id"]) << "\t" << str(e["moving_root"]) << ";b;" << str(e["weight_name"]) << "\n";
    }
    for (const auto& t : j["color_types"]) out << "color_type\t" << str(t["root"]) << "\t" << str(t["type"]) << "\n";
    for (const auto& b : j["boundary"]) out << "boundary\tX" << b["label"] << "\t" << list(b["expansion"]) << "\n";
    return;
  }
  out << "datum          " << str(j["datum"]) << " (" << str(j["kind"]) << ")\n";
  out << "root system    " << str(j["dynkin"]) << "\n";
  out << "rank           " << j["rank"] << "\n";
  out << "picard rank    " << j["picard_rank"] << "\n";
  out << "S^p            " << list(j["s_p"]) << "\n";
  out << "spherical roots\n";
  for (const auto& r : j["spherical_roots"]) out << "  " << r["label"] << "  " << str(r["name"]) << "\n";
  out << "colors\n";
  for (const auto& c : j["colors"]) {
    out << "  " << str(c["id"]) << "  moved by " << list(c["moved_by"]) << "  type " << str(c["type"]) << "  weight "
        << (c["weight_name"].is_null() ? "n/a (exceptional)" : str(c["weight_name"])) << "\n";
  }
  if (!j["schubert_extras"].empty()) {
    out << "schubert divisors\n";
    for (const auto& e : j["schubert_extras"]) {
      out << "  " << str(e["id"]) << "  moved by " << str(e["moving_root"]) << "  weight " << str(e["weight_name"])
          << "\n";
    }
  }
  out << "color types    ";
  std::string types;
  for (const auto& t : j["color_types"]) types += (types.empty() ? "" : " ") + str(t["root"]) + ":" + str(t["type"]);
  out << types << "\n";
  out << "boundary in basis (" << list(j["basis"]) << ")\n";
  for (const auto& b : j["boundary"]) out << "  X" << b["label"] << " = (" << list(b["expansion"]) << ")\n";
}

// -------------------------------------------------------------------- pair

struct PairOptions {
  std::string curve;
  std::string divisor;
  int boundary = 0;
  bool all = false;
};

int cmd_pair(const DatumOptions& dopts, const PairOptions& popts, Format fmt, std::ostream& out) {
  const DatumPtr datum = resolve_datum(dopts);
  const CurveClass c = parse_curve(datum, popts.curve);
  std::vector<std::pair<std::string, Rational>> rows;

  if (!popts.divisor.empty()) {
    DivisorClass d;
    if (const int k = datum->basis_index(popts.divisor); k >= 0) {
      d = basis_divisor(datum, k);
    } else {
      const auto items = split(popts.divisor, ',');
      RatVector v(static_cast<Eigen::Index>(items.size()));
      for (std::size_t k = 0; k < items.size(); ++k) v(static_cast<Eigen::Index>(k)) = parse_rational(items[k]);
      d = make_divisor(datum, v);
    }
    rows.emplace_back(popts.divisor, pair(d, c));
  }
  if (popts.boundary != 0) {
    const auto x = boundary_divisor(datum, popts.boundary - 1);
    rows.emplace_back("X" + std::to_string(popts.boundary), pair(x.expansion, c));
  }
  if (popts.all || rows.empty()) {
    const RatVector p = boundary_pairings(c);
    for (int k = 0; k < datum->rank(); ++k) rows.emplace_back("X" + std::to_string(datum->labels[k] + 1), p(k));
  }

  if (fmt == Format::json) {
    ojson j;
    j["datum"] = datum_name(*datum);
    j["basis"] = basis_json(*datum);
    j["curve"] = vector_json(c.coeffs);
    ojson arr = ojson::array();
    for (const auto& [name, value] : rows) arr.push_back({{"divisor", name}, {"value", rational_json(value)}});
    j["pairings"] = arr;
    out << j.dump(2) << "\n";
  } else if (fmt == Format::tsv) {
    out << "divisor\tpairing\n";
    for (const auto& [name, value] : rows) out << name << "\t" << format(value) << "\n";
  } else {
    out << "curve (" << join(c.coeffs) << ") on " << datum_name(*datum) << "\n";
    for (const auto& [name, value] : rows) out << "  <" << name << ", curve> = " << format(value) << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- certify

ojson certificate_json(const Certificate& cert) {
  const auto& d = *cert.eta.datum;
  ojson c;
  c["eta"] = vector_json(cert.eta.coeffs);
  c["eta1"] = vector_json(cert.eta1.coeffs);
  c["eta2"] = vector_json(cert.eta2.coeffs);
  const bool shaped = cert.eta1.coeffs.size() == cert.eta.coeffs.size() &&
                      cert.eta2.coeffs.size() == cert.eta.coeffs.size();
  if (shaped) {
    c["pairings"] = {{"eta", vector_json(boundary_pairings(cert.eta))},
                     {"eta1", vector_json(boundary_pairings(cert.eta1))},
                     {"eta2", vector_json(boundary_pairings(cert.eta2))}};
  }
  if (cert.witness) {
    c["witness"] = *cert.witness + 1;
    c["witness_pairing"] = rational_json(boundary_pairings(cert.eta2)(d.boundary_position(*cert.witness)));
  } else {
    c["witness"] = nullptr;
    c["witness_pairing"] = nullptr;
  }
  c["gap"] = cert.gap ? rational_json(*cert.gap) : ojson(nullptr);
  c["mode"] = to_string(cert.mode);
  c["valid"] = cert.valid;
  c["stage"] = cert.stage;
  c["violations"] = cert.violations;
  return c;
}

int cmd_certify(const DatumOptions& dopts, const std::string& curve, const std::string& eta1, bool assume,
                std::ostream& out) {
  const DatumPtr datum = resolve_datum(dopts);
  const CurveClass eta = parse_curve(datum, curve);
  ojson j;
  j["datum"] = datum_name(*datum);
  j["basis"] = basis_json(*datum);
  if (!eta1.empty()) {
    const CurveClass e1 = parse_curve(datum, eta1);
    j["certificate"] = certificate_json(check_certificate(eta, e1, eta - e1, assume));
  } else {
    const auto cert = find_certificate(eta, assume);
    j["certificate"] = cert ? certificate_json(*cert) : ojson(nullptr);
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------- limit

int cmd_limit(const DatumOptions& dopts, const std::string& curve, const std::string& order, std::ostream& out) {
  const DatumPtr datum = resolve_datum(dopts);
  const CurveClass eta = parse_curve(datum, curve);
  std::optional<std::vector<int>> ord;
  if (!order.empty()) ord = parse_labels(order);
  const DegenerationChain chain = degeneration_chain(eta, ord);

  ojson j;
  j["datum"] = datum_name(*datum);
  ojson used = ojson::array();
  for (const auto& step : chain.steps) used.push_back(step.i0 + 1);
  j["order"] = used;
  j["input"] = {{"basis", basis_json(*datum)}, {"coeffs", vector_json(eta.coeffs)}};
  ojson steps = ojson::array();
  for (const auto& step : chain.steps) {
    steps.push_back({{"i0", step.i0 + 1},
                     {"source", datum_name(*step.source)},
                     {"target", datum_name(*step.target)},
                     {"input", vector_json(step.input.coeffs)},
                     {"basis", basis_json(*step.target)},
                     {"output", vector_json(step.output.coeffs)}});
  }
  j["steps"] = steps;
  const CurveClass& t = chain.terminal();
  j["terminal"] = {{"datum", datum_name(*t.datum)},
                   {"basis", basis_json(*t.datum)},
                   {"coeffs", vector_json(t.coeffs)}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- dimension

struct DimensionOptions {
  std::string curve;
  int points = 0;
  std::optional<Integer> dim_x;
  std::string anticanonical;
};

int cmd_dimension(const DatumOptions& dopts, const DimensionOptions& o, Format fmt, std::ostream& out) {
  const DatumPtr datum = resolve_datum(dopts);
  const CurveClass eta = parse_curve(datum, o.curve);
  std::optional<IntVector> a;
  if (!o.anticanonical.empty()) a = parse_int_list(o.anticanonical);
  const DimensionReport r = expected_dimension(eta, o.points, o.dim_x, a);
  auto opt = [](const std::optional<Rational>& q) { return q ? rational_json(*q) : ojson(nullptr); };
  ojson j;
  j["datum"] = datum_name(*datum);
  j["curve"] = vector_json(eta.coeffs);
  j["n"] = r.n;
  j["dim_x"] = r.dim_x ? ojson(*r.dim_x) : ojson(nullptr);
  j["boundary_sum"] = rational_json(r.boundary_sum);
  j["pairing_minus_kx"] = opt(r.pairing_minus_kx);
  j["expected_dim"] = opt(r.expected_dim);
  j["m_circ_dim"] = opt(r.m_circ_dim);
  if (fmt == Format::json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  auto text = [](const ojson& v) { return v.is_null() ? std::string("UNAVAILABLE") : v.is_string() ? v.get<std::string>() : v.dump(); };
  const char* sep = fmt == Format::tsv ? "\t" : "  ";
  if (fmt == Format::tsv) out << "quantity\tvalue\n";
  for (const char* key : {"dim_x", "n", "boundary_sum", "pairing_minus_kx", "expected_dim", "m_circ_dim"}) {
    out << key << sep << text(j[key]) << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepOptions {
  std::string series = "A,B,C,D,E,F,G";
  int min_rank = 1;
  int max_rank = 8;
  int coeff_bound = 1;
  int threads = 0;
};

constexpr int kSweepRankCap = 8;
constexpr Integer kSweepBoxCap = 20'000'000;

enum class Outcome { skipped, stage1, stage2, missing };

struct TypeRow {
  std::string type;
  int rank = 0;
  std::size_t movable = 0;
  std::size_t stage1 = 0;
  std::size_t stage2 = 0;
  std::vector<IntVector> missing;
  bool in_scope() const { return rank >= 3; }
};

TypeRow sweep_type(const SimpleFactor& factor, int bound, int threads) {
  const DatumPtr datum = group_datum(DynkinType({factor}));
  const int r = factor.rank;
  Integer total = 1;
  for (int k = 0; k < r; ++k) total *= bound + 1;

  auto unpack = [&](Integer t) {
    IntVector v(r);
    for (int k = r - 1; k >= 0; --k) {
      v(k) = t % (bound + 1);
      t /= bound + 1;
    }
    return v;
  };

  std::vector<Outcome> outcomes(static_cast<std::size_t>(total), Outcome::skipped);
  std::atomic<Integer> next{1};  // index 0 is eta = 0
  auto worker = [&] {
    for (Integer t = next++; t < total; t = next++) {
      const CurveClass eta{datum, unpack(t)};
      if (!is_movable(eta)) continue;
      const auto cert = find_certificate(eta);
      outcomes[static_cast<std::size_t>(t)] =
          !cert ? Outcome::missing : cert->stage == 1 ? Outcome::stage1 : Outcome::stage2;
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  TypeRow row;
  row.type = factor.name();
  row.rank = r;
  for (Integer t = 0; t < total; ++t) {
    switch (outcomes[static_cast<std::size_t>(t)]) {
      case Outcome::skipped: break;
      case Outcome::stage1: ++row.movable; ++row.stage1; break;
      case Outcome::stage2: ++row.movable; ++row.stage2; break;
      case Outcome::missing: ++row.movable; row.missing.push_back(unpack(t)); break;
    }
  }
  return row;
}

int cmd_sweep(const SweepOptions& o, Format fmt, std::ostream& out) {
  if (o.max_rank > kSweepRankCap) {
    throw Error(ErrorCode::InvalidArgument, "--max-rank is capped at " + std::to_string(kSweepRankCap));
  }
  if (o.coeff_bound < 0) throw Error(ErrorCode::InvalidArgument, "--coeff-bound must be nonnegative");
  std::vector<SimpleFactor> types;
  for (const auto& item : split(o.series, ',')) {
    if (item.size() != 1 || std::string("ABCDEFG").find(static_cast<char>(std::toupper(item[0]))) == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "unknown series '" + item + "'");
    }
    const auto series = static_cast<Series>(std::toupper(item[0]));
    for (int r = std::max(1, o.min_rank); r <= o.max_rank; ++r) {
      if (!valid_rank(series, r)) continue;
      Integer box = 1;
      for (int k = 0; k < r; ++k) box *= o.coeff_bound + 1;
      if (box > kSweepBoxCap) throw Error(ErrorCode::InvalidArgument, "coefficient box too large for rank " + std::to_string(r));
      types.push_back({series, r});
    }
  }
  const int threads = o.threads > 0 ? o.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<TypeRow> rows;
  for (const auto& factor : types) rows.push_back(sweep_type(factor, o.coeff_bound, threads));

  bool failed = false;
  auto status = [&](const TypeRow& row) {
    if (!row.in_scope()) return "out_of_scope";
    if (!row.missing.empty()) {
      failed = true;
      return "FAIL";
    }
    return "ok";
  };

  if (fmt == Format::json) {
    ojson j;
    j["coeff_bound"] = o.coeff_bound;
    ojson arr = ojson::array();
    for (const auto& row : rows) {
      ojson missing = ojson::array();
      for (const auto& v : row.missing) missing.push_back(vector_json(v));
      arr.push_back({{"type", row.type},
                     {"rank", row.rank},
                     {"movable", row.movable},
                     {"stage1", row.stage1},
                     {"stage2", row.stage2},
                     {"missing", missing},
                     {"status", status(row)}});
    }
    j["types"] = arr;
    j["ok"] = !failed;
    out << j.dump(2) << "\n";
  } else {
    out << "type\trank\tmovable\tcertified\tstage1\tstage2\tmissing\tstatus\n";
    for (const auto& row : rows) {
      out << row.type << "\t" << row.rank << "\t" << row.movable << "\t" << row.stage1 + row.stage2 << "\t"
          << row.stage1 << "\t" << row.stage2 << "\t" << row.missing.size() << "\t" << status(row) << "\n";
    }
    for (const auto& row : rows) {
      if (!row.in_scope()) continue;
      for (const auto& v : row.missing) out << "missing\t" << row.type << "\t" << join(v) << "\n";
    }
  }
  return failed ? kExitInvariant : kExitOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMovable:
    case ErrorCode::NotEffective:
      return kExitPrecondition;
    case ErrorCode::ConsistencyFailure:
    case ErrorCode::RhoInconsistent:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor and curve lattice arithmetic on wonderful symmetric varieties", "wonderlat"};
  app.require_subcommand(1);

  DatumOptions dopts;
  Common common;

  auto* describe = app.add_subcommand("describe", "spherical data, colors and Picard basis");
  add_datum_options(describe, dopts, true);
  add_format_options(describe, common);

  PairOptions popts;
  auto* pair_cmd = app.add_subcommand("pair", "intersection pairings with a curve class");
  add_datum_options(pair_cmd, dopts, true);
  add_format_options(pair_cmd, common);
  pair_cmd->add_option("--curve", popts.curve, "curve coefficients on the dual basis")->required();
  pair_cmd->add_option("--divisor", popts.divisor, "basis id or coefficient list (p or p/q)");
  pair_cmd->add_option("--boundary", popts.boundary, "boundary label (1-based)")->check(CLI::PositiveNumber);
  pair_cmd->add_flag("--all", popts.all, "every boundary divisor");

  std::string curve, eta1, order;
  bool assume = false;
  auto* certify = app.add_subcommand("certify", "search or check a reducibility certificate (JSON)");
  add_datum_options(certify, dopts, true);
  certify->add_flag("--json", common.json, "JSON output (the default)");
  certify->add_option("--curve", curve, "movable curve class")->required();
  certify->add_option("--eta1", eta1, "check this first part instead of searching");
  certify->add_flag("--assume-nonempty", assume, "take nonemptiness of M° as known");

  auto* limit = app.add_subcommand("limit", "limit-map degeneration chain to the closed orbit (JSON)");
  add_datum_options(limit, dopts, true);
  limit->add_flag("--json", common.json, "JSON output (the default)");
  limit->add_option("--curve", curve, "movable curve class")->required();
  limit->add_option("--order", order, "boundary labels in chain order (default descending)");

  DimensionOptions dim_opts;
  auto* dimension = app.add_subcommand("dimension", "expected dimension of the space of stable maps");
  add_datum_options(dimension, dopts, true);
  add_format_options(dimension, common);
  dimension->add_option("--curve", dim_opts.curve, "curve class")->required();
  dimension->add_option("--points", dim_opts.points, "number of marked points")->check(CLI::NonNegativeNumber);
  dimension->add_option("--dim-x", dim_opts.dim_x, "dimension of X");
  dimension->add_option("--anticanonical", dim_opts.anticanonical, "coefficients a_D of -K_X on the basis");

  SweepOptions sopts;
  auto* sweep = app.add_subcommand("sweep", "certificate search over simple types and movable classes");
  add_format_options(sweep, common);
  sweep->add_option("--series", sopts.series, "comma-separated series letters");
  sweep->add_option("--min-rank", sopts.min_rank, "smallest rank")->check(CLI::PositiveNumber);
  sweep->add_option("--max-rank", sopts.max_rank, "largest rank (at most 8)")->check(CLI::PositiveNumber);
  sweep->add_option("--coeff-bound", sopts.coeff_bound, "coefficients range over 0..k")->check(CLI::NonNegativeNumber);
  sweep->add_option("--threads", sopts.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*describe) {
      print_describe(describe_json(resolve_datum(dopts)), common.format(), out);
      return kExitOk;
    }
    if (*pair_cmd) return cmd_pair(dopts, popts, common.format(), out);
    if (*certify) return cmd_certify(dopts, curve, eta1, assume, out);
    if (*limit) return cmd_limit(dopts, curve, order, out);
    if (*dimension) return cmd_dimension(dopts, dim_opts, common.format(), out);
    if (*sweep) return cmd_sweep(sopts, common.format(), out);
  } catch (const ValidationError& e) {
    err << "error: " << to_string(e.code()) << "\n";
    for (const auto& v : e.violations()) err << "  " << (v.path.empty() ? "/" : v.path) << ": " << v.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kExitUsage;
}

}  // namespace wonderlat
