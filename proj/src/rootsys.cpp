#include "wonderlat/rootsys.hpp"

#include <cctype>

#include "wonderlat/error.hpp"

namespace wonderlat {

namespace {

// Simple roots of each series as rows in an orthonormal basis, following the
// Bourbaki plates. E6 and E7 are the leading roots of the E8 realisation.
RatMatrix euclidean_simple_roots(Series series, int n) {
  const Rational h(1, 2);
  RatMatrix roots;
  auto chain = [&](int count, int dim) {
    roots = RatMatrix::Zero(n, dim);
    for (int i = 0; i < count; ++i) {
      roots(i, i) = 1;
      roots(i, i + 1) = -1;
    }
  };
  switch (series) {
    case Series::A:
      chain(n, n + 1);
      break;
    case Series::B:
      chain(n - 1, n);
      roots(n - 1, n - 1) = 1;
      break;
    case Series::C:
      chain(n - 1, n);
      roots(n - 1, n - 1) = 2;
      break;
    case Series::D:
      chain(n - 1, n);
      roots(n - 1, n - 2) = 1;
      roots(n - 1, n - 1) = 1;
      break;
    case Series::E: {
      roots = RatMatrix::Zero(n, 8);
      roots.row(0).setConstant(-h);
      roots(0, 0) = h;
      roots(0, 7) = h;
      roots(1, 0) = 1;
      roots(1, 1) = 1;
      for (int i = 2; i < n; ++i) {
        roots(i, i - 1) = 1;
        roots(i, i - 2) = -1;
      }
      break;
    }
    case Series::F:
      roots = RatMatrix::Zero(4, 4);
      roots(0, 1) = 1;
      roots(0, 2) = -1;
      roots(1, 2) = 1;
      roots(1, 3) = -1;
      roots(2, 3) = 1;
      roots.row(3).setConstant(-h);
      roots(3, 0) = h;
      break;
    case Series::G:
      roots = RatMatrix::Zero(2, 3);
      roots(0, 0) = 1;
      roots(0, 1) = -1;
      roots(1, 0) = -2;
      roots(1, 1) = 1;
      roots(1, 2) = 1;
      break;
  }
  return roots;
}

IntMatrix simple_cartan(const SimpleFactor& f) {
  const RatMatrix roots = euclidean_simple_roots(f.series, f.rank);
  const RatMatrix gram = roots * roots.transpose();
  IntMatrix cartan(f.rank, f.rank);
  for (int i = 0; i < f.rank; ++i) {
    for (int j = 0; j < f.rank; ++j) {
      const Rational value = 2 * gram(i, j) / gram(i, i);
      if (!is_integral(value)) {
        throw Error(ErrorCode::ConsistencyFailure, "non-integral Cartan entry for " + f.name());
      }
      cartan(i, j) = value.numerator();
    }
  }
  return cartan;
}

void check_index(const RootSystem& rs, int i, const char* what) {
  if (i < 0 || i >= rs.rank()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " index " + std::to_string(i) + " outside rank " + std::to_string(rs.rank()));
  }
}

}  // namespace

bool valid_rank(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

DynkinType::DynkinType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidRank, "empty Dynkin type");
  for (const auto& f : factors_) {
    if (!valid_rank(f.series, f.rank)) throw Error(ErrorCode::InvalidRank, "no simple type " + f.name());
  }
}

DynkinType DynkinType::parse(const std::string& text) {
  std::vector<SimpleFactor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter < 'A' || letter > 'G') throw Error(ErrorCode::ParseError, "bad Dynkin type '" + text + "'");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1 || end - pos > 4) throw Error(ErrorCode::ParseError, "bad Dynkin type '" + text + "'");
    factors.push_back({static_cast<Series>(letter), std::stoi(text.substr(pos + 1, end - pos - 1))});
    pos = end;
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X') throw Error(ErrorCode::ParseError, "bad Dynkin type '" + text + "'");
      ++pos;
      if (pos == text.size()) throw Error(ErrorCode::ParseError, "bad Dynkin type '" + text + "'");
    }
  }
  return DynkinType(std::move(factors));
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string DynkinType::name() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.name();
  }
  return out;
}

DynkinType DynkinType::doubled() const {
  auto factors = factors_;
  factors.insert(factors.end(), factors_.begin(), factors_.end());
  return DynkinType(std::move(factors));
}

int RootSystem::factor_offset(int factor) const {
  int offset = 0;
  for (int k = 0; k < factor; ++k) offset += dynkin.factors()[k].rank;
  return offset;
}

RootSystem build_root_system(const DynkinType& dynkin) {
  RootSystem rs;
  rs.dynkin = dynkin;
  const int n = dynkin.rank();
  rs.cartan = IntMatrix::Zero(n, n);
  rs.factor_of.reserve(n);
  int offset = 0;
  for (std::size_t k = 0; k < dynkin.factors().size(); ++k) {
    const auto& f = dynkin.factors()[k];
    if (!valid_rank(f.series, f.rank)) throw Error(ErrorCode::InvalidRank, "no simple type " + f.name());
    rs.cartan.block(offset, offset, f.rank, f.rank) = simple_cartan(f);
    rs.factor_of.insert(rs.factor_of.end(), f.rank, static_cast<int>(k));
    offset += f.rank;
  }

  rs.adjacency = BoolMatrix::Constant(n, n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rs.adjacency(i, j) = i != j && rs.cartan(i, j) != 0;
  }

  // alpha_j = sum_i cartan(i, j) omega_i, so omega = cartan^{-1} on root coordinates.
  const RatMatrix cartan = to_rational(rs.cartan);
  if (!exact_inverse<Rational>(cartan, rs.fundamental_weights)) {
    throw Error(ErrorCode::ConsistencyFailure, "singular Cartan matrix");
  }
  const RatMatrix transposed = cartan.transpose();
  if (!exact_inverse<Rational>(transposed, rs.fundamental_coweights)) {
    throw Error(ErrorCode::ConsistencyFailure, "singular Cartan matrix");
  }
  return rs;
}

Integer pairing(const RootSystem& rs, int coroot_index, int root_index) {
  check_index(rs, coroot_index, "coroot");
  check_index(rs, root_index, "root");
  return rs.cartan(coroot_index, root_index);
}

Rational pairing_with_weight(const RootSystem& rs, int coroot_index, const RatVector& weight) {
  check_index(rs, coroot_index, "coroot");
  if (weight.size() != rs.rank()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
  return weight(coroot_index);
}

Rational coweight_pairing(const RootSystem& rs, int coweight_index, const RatVector& root) {
  check_index(rs, coweight_index, "coweight");
  if (root.size() != rs.rank()) throw Error(ErrorCode::InvalidArgument, "root has wrong length");
  const RatVector coweight = rs.fundamental_coweights.col(coweight_index);
  return coweight.dot(to_rational(rs.cartan) * root);
}

RatVector root_to_weight_coords(const RootSystem& rs, const RatVector& root) {
  return to_rational(rs.cartan) * root;
}

RatVector weight_to_root_coords(const RootSystem& rs, const RatVector& weight) {
  return rs.fundamental_weights * weight;
}

int dynkin_degree(const RootSystem& rs, int i) {
  check_index(rs, i, "simple root");
  return static_cast<int>(rs.adjacency.row(i).count());
}

bool is_nonextremal(const RootSystem& rs, int i) { return dynkin_degree(rs, i) >= 2; }

}  // namespace wonderlat
