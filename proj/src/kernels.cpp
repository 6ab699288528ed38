#include "curvlab/kernels.hpp"

#include <stdexcept>

#ifdef CURVLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace curvlab::kernels {

namespace {

inline std::size_t at(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return ((i * n + j) * n + k) * n + l;
}

void check_size(std::size_t n, std::size_t size, const char* what) {
  if (size != n * n * n * n) throw std::invalid_argument(std::string(what) + ": tensor has wrong size");
}

void check_terms(std::size_t n, std::span<const Term> terms) {
  for (const auto& t : terms)
    if (t.a->rows() != n || t.a->cols() != n || t.b->rows() != n || t.b->cols() != n)
      throw std::invalid_argument("assemble: term operator has wrong shape");
}

Vector reduced_spectrum(std::size_t n, std::span<const double> r, const Vector& x) {
  const Matrix m = jacobi(n, r, x);
  const Matrix b = complement_basis(x);
  const Matrix red = b.transpose() * m * b;
  return jacobi_eigen(sym_part(red)).values;
}

}  // namespace

void assemble(std::size_t n, std::span<const Term> terms, std::span<double> out) {
  check_size(n, out.size(), "assemble");
  check_terms(n, terms);
  const auto ni = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long ii = 0; ii < ni; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          double s = 0.0;
          for (const auto& t : terms) {
            const Matrix& a = *t.a;
            const Matrix& b = *t.b;
            if (t.kind == TermKind::Wedge)
              s += t.coef * (a(k, i) * b(l, j) - b(k, j) * a(l, i));
            else
              s += 2.0 * t.coef * a(j, i) * b(l, k);
          }
          out[at(n, i, j, k, l)] += s;
        }
  }
}

void assemble_serial(std::size_t n, std::span<const Term> terms, std::span<double> out) {
  check_size(n, out.size(), "assemble_serial");
  check_terms(n, terms);
  for (const auto& t : terms) {
    const Matrix& a = *t.a;
    const Matrix& b = *t.b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            double v;
            if (t.kind == TermKind::Wedge)
              v = a(k, i) * b(l, j) - b(k, j) * a(l, i);
            else
              v = 2.0 * a(j, i) * b(l, k);
            out[at(n, i, j, k, l)] += t.coef * v;
          }
  }
}

Matrix clifford_gradient(std::size_t n, std::span<const double> r, const Matrix& j) {
  check_size(n, r.size(), "clifford_gradient");
  Matrix g(n, n);
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long aa = 0; aa < nn; ++aa) {
    const auto a = static_cast<std::size_t>(aa);
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          s += r[at(n, b, p, a, q)] * j(q, p);
          s -= r[at(n, b, p, q, a)] * j(q, p);
          s += r[at(n, p, b, q, a)] * j(q, p);
          s -= r[at(n, p, b, a, q)] * j(q, p);
          s += 2.0 * r[at(n, b, a, p, q)] * j(q, p);
          s += 2.0 * r[at(n, p, q, b, a)] * j(q, p);
        }
      g(a, b) = s;
    }
  }
  return g;
}

Matrix clifford_gradient_serial(std::size_t n, std::span<const double> r, const Matrix& j) {
  check_size(n, r.size(), "clifford_gradient_serial");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = r[at(n, i, jj, k, l)];
          if (v == 0.0) continue;
          g(k, i) += v * j(l, jj);
          g(l, i) -= v * j(k, jj);
          g(l, jj) += v * j(k, i);
          g(k, jj) -= v * j(l, i);
          g(jj, i) += 2.0 * v * j(l, k);
          g(l, k) += 2.0 * v * j(jj, i);
        }
  return g;
}

Matrix ricci(std::size_t n, std::span<const double> r) {
  check_size(n, r.size(), "ricci");
  Matrix out(n, n);
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long kk = 0; kk < nn; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    for (std::size_t l = 0; l < n; ++l) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += r[at(n, k, j, l, j)];
      out(k, l) = s;
    }
  }
  return out;
}

Matrix ricci_serial(std::size_t n, std::span<const double> r) {
  check_size(n, r.size(), "ricci_serial");
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out(k, l) += r[at(n, k, j, l, j)];
  return out;
}

Matrix jacobi(std::size_t n, std::span<const double> r, std::span<const double> x) {
  check_size(n, r.size(), "jacobi");
  if (x.size() != n) throw std::invalid_argument("jacobi: direction has wrong dimension");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const double w = x[i] * x[k];
      if (w == 0.0) continue;
      for (std::size_t jj = 0; jj < n; ++jj)
        for (std::size_t l = 0; l < n; ++l) m(l, jj) += w * r[at(n, i, jj, k, l)];
    }
  }
  return sym_part(m);
}

std::vector<Vector> reduced_spectra(std::size_t n, std::span<const double> r, std::span<const Vector> dirs) {
  check_size(n, r.size(), "reduced_spectra");
  std::vector<Vector> out(dirs.size());
  const auto nd = static_cast<long>(dirs.size());
#pragma omp parallel for schedule(dynamic)
  for (long d = 0; d < nd; ++d) out[static_cast<std::size_t>(d)] = reduced_spectrum(n, r, dirs[static_cast<std::size_t>(d)]);
  return out;
}

std::vector<Vector> reduced_spectra_serial(std::size_t n, std::span<const double> r,
                                           std::span<const Vector> dirs) {
  check_size(n, r.size(), "reduced_spectra_serial");
  std::vector<Vector> out;
  out.reserve(dirs.size());
  for (const auto& x : dirs) out.push_back(reduced_spectrum(n, r, x));
  return out;
}

double inner(std::span<const double> a, std::span<const double> b) { return dot(a, b); }

bool parallel_enabled() {
#ifdef CURVLAB_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef CURVLAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace curvlab::kernels
