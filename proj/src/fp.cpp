#include "stabkit/fp.hpp"

#include <algorithm>

namespace stabkit::fp {

Mat::Mat(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (p < 2) throw domain_error("field characteristic must be a prime >= 2");
  if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::identity(int p, int n) {
  Mat m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Mat::set(int r, int c, int v) {
  int m = v % p_;
  if (m < 0) m += p_;
  e_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(m);
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw domain_error("matrix product shape mismatch");
  Mat out(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.set(i, j, out.at(i, j) + aik * o.at(k, j));
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw domain_error("matrix sum shape mismatch");
  Mat out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + o.at(i, j));
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(p_ - 1); }

Mat Mat::scaled(int v) const {
  Mat out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * v);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](uint8_t x) { return x == 0; });
}

std::vector<uint8_t> Mat::row(int r) const {
  return {e_.begin() + static_cast<size_t>(r) * cols_,
          e_.begin() + static_cast<size_t>(r + 1) * cols_};
}

void Mat::set_row(int r, const std::vector<uint8_t>& v) {
  std::copy(v.begin(), v.end(), e_.begin() + static_cast<size_t>(r) * cols_);
}

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw domain_error("no inverse of 0");
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) {  // a^(p-2) mod p
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int piv = -1;
    for (int r = lead; r < rows_; ++r)
      if (at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(e_[piv * cols_ + j], e_[lead * cols_ + j]);
    int inv = inverse_mod(at(lead, c), p_);
    for (int j = 0; j < cols_; ++j) set(lead, j, at(lead, j) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || !at(r, c)) continue;
      int f = at(r, c);
      for (int j = 0; j < cols_; ++j) set(r, j, at(r, j) + (p_ - f) * at(lead, j));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

int Mat::rank() const {
  Mat copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<uint8_t> reduce_against(const Mat& basis, std::vector<uint8_t> v) {
  int p = basis.p();
  for (int r = 0; r < basis.rows(); ++r) {
    int pc = -1;
    for (int c = 0; c < basis.cols(); ++c)
      if (basis.at(r, c)) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    int f = v[pc];
    if (!f) continue;
    for (int c = 0; c < basis.cols(); ++c)
      v[c] = static_cast<uint8_t>((v[c] + (p - f) * basis.at(r, c)) % p);
  }
  return v;
}

bool in_span(const Mat& basis, const std::vector<uint8_t>& v) {
  auto res = reduce_against(basis, v);
  return std::all_of(res.begin(), res.end(), [](uint8_t x) { return x == 0; });
}

std::vector<uint8_t> coords_in_span(const Mat& basis, const std::vector<uint8_t>& v) {
  int p = basis.p();
  std::vector<uint8_t> coords(basis.rows(), 0);
  std::vector<uint8_t> w = v;
  for (int r = 0; r < basis.rows(); ++r) {
    int pc = -1;
    for (int c = 0; c < basis.cols(); ++c)
      if (basis.at(r, c)) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    int f = w[pc];
    coords[r] = static_cast<uint8_t>(f);
    if (!f) continue;
    for (int c = 0; c < basis.cols(); ++c)
      w[c] = static_cast<uint8_t>((w[c] + (p - f) * basis.at(r, c)) % p);
  }
  if (!std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; }))
    throw domain_error("vector not in span");
  return coords;
}

bool subspace_leq(const Mat& a, const Mat& b) {
  for (int r = 0; r < a.rows(); ++r)
    if (!in_span(b, a.row(r))) return false;
  return true;
}

std::vector<Mat> all_subspaces(int p, int d) {
  std::vector<Mat> out;
  for (int r = 0; r <= d; ++r) {
    // choose pivot columns p_0 < ... < p_{r-1}
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // free positions: (i, c) with c > piv[i], c not a pivot
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < r; ++i)
        for (int c = piv[i] + 1; c < d; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(i, c);

      std::vector<uint8_t> assign(free_pos.size(), 0);
      while (true) {
        Mat m(p, r, d);
        for (int i = 0; i < r; ++i) m.set(i, piv[i], 1);
        for (size_t k = 0; k < free_pos.size(); ++k)
          m.set(free_pos[k].first, free_pos[k].second, assign[k]);
        out.push_back(std::move(m));

        size_t k = 0;
        for (; k < assign.size(); ++k) {
          if (++assign[k] < p) break;
          assign[k] = 0;
        }
        if (k == assign.size()) break;
      }

      if (r == 0) break;
      // next pivot combination
      int i = r - 1;
      while (i >= 0 && piv[i] == d - r + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
    if (r == 0 && d == 0) break;
  }
  return out;
}

Mat kernel(const Mat& m) {
  Mat work = m;
  std::vector<int> pivots = work.rref();
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  Mat out(m.p(), static_cast<int>(free_cols.size()), m.cols());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out.set(static_cast<int>(k), fc, 1);
    for (size_t r = 0; r < pivots.size(); ++r)
      out.set(static_cast<int>(k), pivots[r], -static_cast<int>(work.at(static_cast<int>(r), fc)));
  }
  return out;
}

}  // namespace stabkit::fp
