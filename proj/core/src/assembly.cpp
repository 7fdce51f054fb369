#include "foliage/assembly.hpp"

#include <cstdio>
#include <map>
#include <ostream>

#include "foliage/exterior.hpp"
#include "foliage/parallel.hpp"

namespace foliage {

Component Component::parse(const std::string& s) {
  if (s == "all") return all();
  try {
    std::size_t pos = 0;
    auto comma = s.find(',');
    if (comma == std::string::npos) {
      int d = std::stoi(s, &pos);
      if (pos != s.size() || d < 0) throw ArgumentError("");
      return degree(d);
    }
    int r = std::stoi(s.substr(0, comma), &pos);
    if (pos != comma) throw ArgumentError("");
    std::string rest = s.substr(comma + 1);
    int q = std::stoi(rest, &pos);
    if (pos != rest.size() || r < 0 || q < 0) throw ArgumentError("");
    return bidegree(r, q);
  } catch (const std::exception&) {
    throw ArgumentError("invalid component '" + s + "'; expected 'all', a degree like '2', or a bidegree like '1,1'");
  }
}

bool Component::contains(const CoframeWord& w) const {
  switch (kind_) {
    case Kind::all: return true;
    case Kind::degree: return w.degree() == degree_;
    case Kind::bidegree: return w.holo_degree() == r_ && w.anti_degree() == s_;
  }
  return false;
}

std::string Component::to_string() const {
  switch (kind_) {
    case Kind::all: return "all";
    case Kind::degree: return std::to_string(degree_);
    case Kind::bidegree: return std::to_string(r_) + "," + std::to_string(s_);
  }
  return "";
}

Component codomain_for(OperatorKind kind, const Component& domain) {
  const OperatorInfo& oi = info(kind);
  switch (domain.kind()) {
    case Component::Kind::all: return Component::all();
    case Component::Kind::degree: return Component::degree(domain.deg() + oi.degree_shift);
    case Component::Kind::bidegree:
      if (oi.bidegree_shift)
        return Component::bidegree(domain.r() + oi.bidegree_shift->first, domain.s() + oi.bidegree_shift->second);
      return Component::degree(domain.deg() + oi.degree_shift);
  }
  return Component::all();
}

std::vector<ModeVector> truncated_modes(int dims, int K) {
  std::vector<ModeVector> out;
  ModeVector m{};
  for (int j = 0; j < dims; ++j) m[j] = -K;
  if (K < 0) return out;
  while (true) {
    out.push_back(m);
    int j = dims - 1;
    while (j >= 0 && m[j] == K) {
      m[j] = -K;
      --j;
    }
    if (j < 0) break;
    ++m[j];
  }
  return out;
}

std::vector<CoframeWord> fiber_words(int n, const Component& c) {
  std::vector<CoframeWord> out;
  for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    CoframeWord w(n, mask);
    if (c.contains(w)) out.push_back(w);
  }
  return out;
}

std::vector<BasisElement> truncated_basis(const FoliationModel& model, int K, const Component& c) {
  std::vector<BasisElement> out;
  const auto words = fiber_words(model.n(), c);
  for (const ModeVector& m : truncated_modes(model.dims(), K))
    for (const CoframeWord& w : words) out.push_back({w, m});
  return out;
}

BasicForm basis_form(const FoliationModel& model, const BasisElement& e, Complex c) {
  BasicForm out(model.n(), model.dims());
  out.add(e.word, e.mode, c);
  return out;
}

void require_truncation(const FoliationModel& model, int K) {
  if (K < 0) throw ArgumentError("truncation K must be non-negative");
  if (K < model.bandwidth())
    throw TruncationError("truncation K=" + std::to_string(K) + " is below the bandwidth " +
                          std::to_string(model.bandwidth()) + " of model " + model.id() + " coefficients");
}

namespace {

bool within(const ModeVector& m, int dims, int K) {
  for (int j = 0; j < dims; ++j)
    if (m[j] < -K || m[j] > K) return false;
  return true;
}

using Index = std::map<std::pair<ModeVector, std::uint32_t>, int>;

Index make_index(const std::vector<BasisElement>& basis) {
  Index idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(std::pair{basis[i].mode, basis[i].word.mask()}, int(i));
  return idx;
}

}  // namespace

Eigen::VectorXcd AssembledOperator::to_domain_vector(const BasicForm& a) const {
  Index idx = make_index(domain);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(domain.size());
  for (const auto& [w, f] : a.terms())
    for (const auto& [m, c] : f.terms()) {
      auto it = idx.find({m, w.mask()});
      if (it == idx.end()) throw TruncationError("form has a term outside the operator domain");
      v[it->second] = c;
    }
  return v;
}

BasicForm AssembledOperator::from_codomain_vector(const FoliationModel& model, const Eigen::VectorXcd& v) const {
  BasicForm out(model.n(), model.dims());
  for (std::size_t i = 0; i < codomain.size(); ++i) out.add(codomain[i].word, codomain[i].mode, v[i]);
  return out;
}

AssembledOperator assemble_map(const FoliationModel& model, const std::string& tag, const FormMap& map, int K,
                               const Component& domain, const Component& codomain) {
  require_truncation(model, K);
  AssembledOperator op;
  op.tag = tag;
  op.model_id = model.id();
  op.K = K;
  op.dims = model.dims();
  op.domain_component = domain;
  op.codomain_component = codomain;
  op.domain = truncated_basis(model, K, domain);
  op.codomain = truncated_basis(model, K, codomain);
  const Index rows = make_index(op.codomain);

  const std::size_t ncols = op.domain.size();
  std::vector<std::vector<Eigen::Triplet<Complex>>> cols(ncols);
  std::vector<char> overflow(ncols, 0);
  parallel_for(ncols, [&](std::size_t j) {
    BasicForm image = map(basis_form(model, op.domain[j]));
    for (const auto& [w, f] : image.terms()) {
      if (!codomain.contains(w))
        throw ConsistencyError("operator " + tag + " maps outside codomain component " + codomain.to_string());
      for (const auto& [m, c] : f.terms()) {
        if (!within(m, model.dims(), K)) {
          overflow[j] = 1;
          continue;
        }
        cols[j].emplace_back(rows.at({m, w.mask()}), int(j), c);
      }
    }
  });
  std::vector<Eigen::Triplet<Complex>> all;
  for (std::size_t j = 0; j < ncols; ++j) {
    all.insert(all.end(), cols[j].begin(), cols[j].end());
    if (overflow[j]) op.overflow_columns.push_back(int(j));
  }
  op.matrix.resize(Eigen::Index(op.codomain.size()), Eigen::Index(ncols));
  op.matrix.setFromTriplets(all.begin(), all.end());
  op.matrix.makeCompressed();
  return op;
}

AssembledOperator assemble(const FoliationModel& model, OperatorKind kind, int K, const Component& domain) {
  return assemble_map(
      model, to_string(kind), [&](const BasicForm& a) { return apply(model, kind, a); }, K, domain,
      codomain_for(kind, domain));
}

AssembledOperator laplacian(const FoliationModel& model, OperatorKind kind, int K, const Component& component) {
  if (!info(kind).laplacian) throw ArgumentError("laplacian: " + to_string(kind) + " is not a Laplacian kind");
  const bool needs_j = kind != OperatorKind::Delta_B && kind != OperatorKind::Delta_T;
  if (needs_j && !model.flags().hermitian)
    throw CapabilityError("laplacian " + to_string(kind) + " needs the hermitian flag, absent on " + model.id());
  return assemble(model, kind, K, component);
}

AssembledOperator compose(const AssembledOperator& a, const AssembledOperator& b) {
  if (a.model_id != b.model_id || a.K != b.K || !(a.domain == b.codomain))
    throw ModelMismatchError("compose: operator bases do not chain (" + a.tag + " after " + b.tag + ")");
  AssembledOperator op;
  op.tag = a.tag + " o " + b.tag;
  op.model_id = a.model_id;
  op.K = a.K;
  op.dims = a.dims;
  op.domain_component = b.domain_component;
  op.codomain_component = a.codomain_component;
  op.domain = b.domain;
  op.codomain = a.codomain;
  op.matrix = (a.matrix * b.matrix).pruned();
  op.overflow_columns = b.overflow_columns;
  return op;
}

Eigen::MatrixXcd fiber_block(const FoliationModel& model, const FormMap& map, const ModeVector& m) {
  const int size = 1 << (2 * model.n());
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(size, size);
  for (int col = 0; col < size; ++col) {
    BasicForm image = map(basis_form(model, {CoframeWord(model.n(), std::uint32_t(col)), m}));
    for (const auto& [w, f] : image.terms())
      for (const auto& [mode, c] : f.terms()) {
        if (mode != m) throw CapabilityError("fiber_block: operator couples Fourier modes on " + model.id());
        block(int(w.mask()), col) = c;
      }
  }
  return block;
}

void export_matrix_market(const AssembledOperator& op, std::ostream& os) {
  char buf[128];
  os << "%%foliage-operator matrix coordinate complex general\n";
  os << "% model " << op.model_id << "\n";
  os << "% kind " << op.tag << "\n";
  os << "% K " << op.K << "\n";
  os << "% component " << op.domain_component.to_string() << " -> " << op.codomain_component.to_string() << "\n";
  os << "% overflow_columns " << op.overflow_columns.size() << "\n";
  for (std::size_t i = 0; i < op.domain.size(); ++i)
    os << "% col " << i + 1 << ' ' << op.domain[i].word.to_string() << ' '
       << mode_to_string(op.domain[i].mode, op.dims) << "\n";
  for (std::size_t i = 0; i < op.codomain.size(); ++i)
    os << "% row " << i + 1 << ' ' << op.codomain[i].word.to_string() << ' '
       << mode_to_string(op.codomain[i].mode, op.dims) << "\n";
  os << op.matrix.rows() << ' ' << op.matrix.cols() << ' ' << op.matrix.nonZeros() << "\n";
  for (int k = 0; k < op.matrix.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(op.matrix, k); it; ++it) {
      std::snprintf(buf, sizeof buf, "%ld %ld %.17g %.17g\n", long(it.row() + 1), long(it.col() + 1),
                    it.value().real(), it.value().imag());
      os << buf;
    }
}

}  // namespace foliage
