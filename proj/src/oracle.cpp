#include "wonderlat/oracle.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <Eigen/LU>

#ifndef WONDERLAT_FIXTURE_DIR
#define WONDERLAT_FIXTURE_DIR "fixtures"
#endif

namespace wonderlat::oracle {

namespace {

std::vector<std::string> split_type(const std::string& type) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : type) {
    if (ch == 'x' || ch == 'X') {
      parts.push_back(current);
      current.clear();
    } else {
      current += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
  }
  parts.push_back(current);
  return parts;
}

IntMatrix read_table(const std::string& kind, const std::string& simple) {
  const std::string path = fixture_dir() + "/" + kind + "/" + simple + ".txt";
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FixtureMissing, "missing fixture " + path);
  std::vector<std::vector<Integer>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<Integer> row;
    Integer x;
    while (fields >> x) row.push_back(x);
    if (!row.empty()) rows.push_back(row);
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw Error(ErrorCode::FixtureMissing, "ragged fixture " + path);
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix block_table(const std::string& kind, const std::string& type) {
  std::vector<IntMatrix> blocks;
  Eigen::Index n = 0;
  for (const auto& part : split_type(type)) {
    blocks.push_back(read_table(kind, part));
    n += blocks.back().rows();
  }
  IntMatrix m = IntMatrix::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    m.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return m;
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("WONDERLAT_FIXTURES"); env && *env) return env;
  return WONDERLAT_FIXTURE_DIR;
}

IntMatrix cartan_fixture(const std::string& type) { return block_table("cartan", type); }

BoolMatrix adjacency_fixture(const std::string& type) { return block_table("adjacency", type).cast<bool>(); }

IntMatrix boundary_matrix_oracle(const SphericalDatum& datum) {
  if (datum.kind != DatumKind::group_compactification || !datum.group_type) {
    throw Error(ErrorCode::NotGroupKind, "oracle covers group compactifications only");
  }
  return boundary_matrix_oracle(datum.group_type->name());
}

IntMatrix boundary_matrix_oracle(const std::string& type) {
  const IntMatrix c = cartan_fixture(type);
  IntMatrix m(c.rows(), c.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) m(i, j) = c(j, i);
  }
  return m;
}

IntVector boundary_pairings_oracle(const std::string& type, const IntVector& eta) {
  const IntMatrix c = cartan_fixture(type);
  IntVector out = IntVector::Zero(c.rows());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.rows(); ++j) out(i) += eta(j) * c(j, i);
  }
  return out;
}

std::map<std::string, Integer> subvariety_expansion_oracle(const std::string& type, const std::vector<int>& removed,
                                                           int label) {
  const IntMatrix c = cartan_fixture(type);
  std::map<std::string, Integer> out;
  for (int j = 0; j < c.rows(); ++j) {
    const std::string id = "D" + std::to_string(j + 1);
    bool gone = false;
    for (int i : removed) gone = gone || i == j;
    if (gone) {
      // alpha_j^vee and beta_j^vee both see alpha_label + beta_label the same way.
      out[id + "+"] = c(j, label);
      out[id + "-"] = c(j, label);
    } else {
      out[id] = c(j, label);
    }
  }
  return out;
}

bool movable_oracle(const std::string& type, const IntVector& eta) {
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    if (eta(i) < 0) return false;
  }
  const IntVector p = boundary_pairings_oracle(type, eta);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0) return false;
  }
  return true;
}

Integer gap_oracle(const std::string& type, const IntVector& eta1, const IntVector& eta2) {
  const IntVector p1 = boundary_pairings_oracle(type, eta1);
  const IntVector p2 = boundary_pairings_oracle(type, eta2);
  Integer count = 0;
  Integer sum = 0;
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    if (p1(i) < 0) {
      ++count;
      sum += p1(i);
    }
    if (p2(i) < 0) {
      ++count;
      sum += p2(i);
    }
  }
  return 1 + count + sum;
}

std::optional<Split> exhaustive_certificate_oracle(const std::string& type, const IntVector& eta) {
  const Eigen::Index n = eta.size();
  Integer total = 1;
  for (Eigen::Index i = 0; i < n; ++i) total *= eta(i) + 1;
  // Index t enumerates the box in lexicographic order, last coordinate fastest.
  for (Integer t = 0; t < total; ++t) {
    IntVector e1(n);
    Integer rest = t;
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      e1(i) = rest % (eta(i) + 1);
      rest /= eta(i) + 1;
    }
    const IntVector e2 = eta - e1;
    if (e1.isZero() || e2.isZero()) continue;
    const IntVector p1 = boundary_pairings_oracle(type, e1);
    const IntVector p2 = boundary_pairings_oracle(type, e2);
    bool disjoint = true;
    int witness = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (p1(i) < 0 && p2(i) < 0) disjoint = false;
      if (witness < 0 && p2(i) <= -2) witness = static_cast<int>(i);
    }
    if (!disjoint || witness < 0) continue;
    const Integer gap = gap_oracle(type, e1, e2);
    if (gap > 0) continue;
    return Split{e1, e2, witness, gap};
  }
  return std::nullopt;
}

std::map<std::string, Integer> limit_chain_oracle(const IntVector& eta, const std::vector<int>& order) {
  std::map<std::string, Integer> coeffs;
  for (Eigen::Index i = 0; i < eta.size(); ++i) coeffs["D" + std::to_string(i + 1)] = eta(i);
  for (int i0 : order) {
    const std::string id = "D" + std::to_string(i0 + 1);
    const Integer c = coeffs.at(id);
    coeffs.erase(id);
    coeffs[id + "+"] = 0;
    coeffs[id + "-"] = c;
  }
  return coeffs;
}

IntVector adapted_pairings_oracle(const std::string& type, int i0) {
  const IntMatrix c = cartan_fixture(type);
  const Eigen::Index r = c.rows();
  Eigen::MatrixXd doubled = Eigen::MatrixXd::Zero(2 * r, 2 * r);
  doubled.block(0, 0, r, r) = c.cast<double>();
  doubled.block(r, r, r, r) = c.cast<double>();
  // omega^vee = sum_k x_k alpha_k^vee with sum_k x_k C(k, j) = delta_{i0 j}.
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * r);
  rhs(i0) = 1;
  const Eigen::VectorXd x = doubled.transpose().partialPivLu().solve(rhs);
  IntVector out(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    Eigen::VectorXd alpha_bar = Eigen::VectorXd::Zero(2 * r);
    alpha_bar(i) = 1;
    alpha_bar(r + i) = 1;
    out(i) = static_cast<Integer>(std::llround(x.dot(doubled * alpha_bar)));
  }
  return out;
}

IntVector color_weight_oracle(int n, const std::vector<IntVector>& spherical_roots, const std::vector<int>& moved_by) {
  IntVector w = IntVector::Zero(n);
  if (moved_by.size() == 2) {
    w(moved_by[0]) += 1;
    w(moved_by[1]) += 1;
    return w;
  }
  const int root = moved_by.front();
  for (const auto& gamma : spherical_roots) {
    IntVector twice = IntVector::Zero(n);
    twice(root) = 2;
    if (gamma == twice) {
      w(root) = 2;
      return w;
    }
  }
  w(root) = 1;
  return w;
}

Integer expected_dimension_oracle(const std::string& type, const IntVector& eta, const IntVector& a, Integer dim_x,
                                  int n) {
  const IntVector p = boundary_pairings_oracle(type, eta);
  Integer total = dim_x + n - 3;
  for (Eigen::Index i = 0; i < p.size(); ++i) total += p(i) + a(i) * eta(i);
  return total;
}

Pgl4Golden pgl4_golden() {
  Pgl4Golden g;
  g.eta = IntVector::Ones(3);
  g.eta1 = (IntVector(3) << 0, 1, 0).finished();
  g.eta2 = (IntVector(3) << 1, 0, 1).finished();
  g.pair_eta = (IntVector(3) << 1, 0, 1).finished();
  g.pair_eta1 = (IntVector(3) << -1, 2, -1).finished();
  g.pair_eta2 = (IntVector(3) << 2, -2, 2).finished();
  return g;
}

}  // namespace wonderlat::oracle
