#include "akizuki/linalg.hpp"

namespace akizuki {

std::optional<std::vector<AElem>> solve_linear(const AMatrix& M,
                                               const std::vector<AElem>& b) {
  long m = M.n_rows(), n = M.n_cols();
  if (static_cast<long>(b.size()) != m)
    fail(Err::DimensionMismatch, "matrix has " + std::to_string(m) +
                                     " rows, target has " + std::to_string(b.size()));
  for (const auto& row : M.rows)
    if (static_cast<long>(row.size()) != n)
      fail(Err::DimensionMismatch, "ragged matrix");

  auto A = M.rows;
  auto rhs = b;
  std::vector<long> col_of(static_cast<size_t>(n));
  for (long j = 0; j < n; ++j) col_of[static_cast<size_t>(j)] = j;

  long rank = 0;
  for (long k = 0; k < std::min(m, n); ++k) {
    long pi = -1, pj = -1;
    long pval = 0;
    for (long i = k; i < m; ++i)
      for (long j = k; j < n; ++j) {
        const AElem& e = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e.is_zero()) continue;
        long v = *e.valuation();
        if (pi < 0 || v < pval) {
          pi = i;
          pj = j;
          pval = v;
        }
      }
    if (pi < 0) break;
    std::swap(A[static_cast<size_t>(k)], A[static_cast<size_t>(pi)]);
    std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(pi)]);
    if (pj != k) {
      for (long i = 0; i < m; ++i)
        std::swap(A[static_cast<size_t>(i)][static_cast<size_t>(k)],
                  A[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
      std::swap(col_of[static_cast<size_t>(k)], col_of[static_cast<size_t>(pj)]);
    }
    const AElem& piv = A[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (long i = k + 1; i < m; ++i) {
      AElem& lead = A[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (lead.is_zero()) continue;
      AElem q = lead.divide_exact(piv);  // pivot valuation is minimal
      for (long j = k; j < n; ++j)
        A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] -
            q * A[static_cast<size_t>(k)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] - q * rhs[static_cast<size_t>(k)];
    }
    rank = k + 1;
  }

  for (long i = rank; i < m; ++i)
    if (!rhs[static_cast<size_t>(i)].is_zero()) return std::nullopt;

  RingPtr ring;
  if (!b.empty())
    ring = b.front().ring();
  else if (!M.rows.empty() && !M.rows.front().empty())
    ring = M.rows.front().front().ring();
  if (!ring) return std::vector<AElem>{};
  std::vector<AElem> h(static_cast<size_t>(n), AElem::zero(ring));
  for (long k = rank - 1; k >= 0; --k) {
    AElem acc = rhs[static_cast<size_t>(k)];
    for (long j = k + 1; j < n; ++j)
      acc = acc - A[static_cast<size_t>(k)][static_cast<size_t>(j)] * h[static_cast<size_t>(j)];
    if (acc.is_zero()) continue;
    const AElem& piv = A[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (*acc.valuation() < *piv.valuation()) return std::nullopt;
    h[static_cast<size_t>(k)] = acc.divide_exact(piv);
  }

  std::vector<AElem> out(static_cast<size_t>(n), AElem::zero(ring));
  for (long j = 0; j < n; ++j) out[static_cast<size_t>(col_of[static_cast<size_t>(j)])] = h[static_cast<size_t>(j)];
  return out;
}

std::optional<Certificate> module_membership(const BElem& target,
                                             const std::vector<CElem>& generators,
                                             long level, long degree_bound,
                                             long slack) {
  const ParamsPtr& P = target.params();
  P->check_index(level);
  if (target.level() > level)
    fail(Err::LevelOutOfRange, "target lives above the requested level");
  MembershipResult tm = c_membership(target.coerce_up(level), level);
  if (!tm.ok())
    fail(Err::LevelOutOfRange,
         "target is not representable at level " + std::to_string(level));
  const CElem& T = *tm.elem;

  long bmax = degree_bound + slack;
  struct Word {
    long b;
    bool wtrack;
  };
  std::vector<Word> words;
  for (long b = 0; b <= bmax; ++b) {
    words.push_back({b, false});
    words.push_back({b, true});
  }

  std::vector<CElem> gens_at;
  for (const auto& g : generators) gens_at.push_back(g.coerce_to(level));

  // columns: (generator, multiplier word); products expanded in the basis
  std::vector<CElem> cols;
  std::vector<std::string> col_labels;
  for (size_t j = 0; j < gens_at.size(); ++j) {
    for (const auto& wd : words) {
      CElem mult = wd.wtrack ? CElem::w(P, level) : CElem::from_a(P, AElem::one(P->ring), level);
      for (long i = 0; i < wd.b; ++i) mult = mult * CElem::y(P, level);
      cols.push_back(mult * gens_at[j]);
      col_labels.push_back("g" + std::to_string(j) + "*" + (wd.wtrack ? "w*" : "") +
                           "y^" + std::to_string(wd.b));
    }
  }

  long brows = 0;
  auto note_degree = [&brows](const CElem& f) {
    if (!f.c().empty()) brows = std::max(brows, f.c().rbegin()->first);
    if (!f.d().empty()) brows = std::max(brows, f.d().rbegin()->first);
  };
  note_degree(T);
  for (const auto& col : cols) note_degree(col);

  AMatrix M;
  std::vector<AElem> rhs;
  M.col_labels = std::move(col_labels);
  for (long b = 0; b <= brows; ++b) {
    for (int track = 0; track < 2; ++track) {
      std::vector<AElem> row;
      for (const auto& col : cols)
        row.push_back(track == 0 ? col.c_at(b) : col.d_at(b));
      M.rows.push_back(std::move(row));
      M.row_labels.push_back((track == 0 ? "y^" : "w*y^") + std::to_string(b));
      rhs.push_back(track == 0 ? T.c_at(b) : T.d_at(b));
    }
  }

  auto sol = solve_linear(M, rhs);
  if (!sol) return std::nullopt;

  Certificate cert;
  cert.target = T;
  size_t idx = 0;
  for (size_t j = 0; j < gens_at.size(); ++j) {
    CElem mult = CElem::zero(P, level);
    for (const auto& wd : words) {
      const AElem& a = (*sol)[idx++];
      if (a.is_zero()) continue;
      CElem word = wd.wtrack ? CElem::w(P, level) : CElem::from_a(P, AElem::one(P->ring), level);
      for (long i = 0; i < wd.b; ++i) word = word * CElem::y(P, level);
      mult = mult + word.scaled(a);
    }
    if (!mult.is_zero()) cert.terms.emplace_back(mult, gens_at[j]);
  }
  if (!cert.verify())
    fail(Err::Internal, "module_membership produced a non-verifying certificate");
  return cert;
}

}  // namespace akizuki
