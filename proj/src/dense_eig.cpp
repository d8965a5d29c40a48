#include "dense_eig.hpp"

#include <stdexcept>
#include <string>
#include <vector>

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a,
             const int* lda, double* w, double* work, const int* lwork,
             int* iwork, const int* liwork, int* info);
}

namespace motzkin::detail {

EigResult eig_sym(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eig_sym: matrix must be square");
  }
  const int n = static_cast<int>(a.rows());
  EigResult result;
  result.values.resize(n);
  if (n == 0) {
    result.vectors.resize(0, 0);
    return result;
  }
  result.vectors = a;  // column-major, overwritten with eigenvectors

  const char jobz = 'V';
  const char uplo = 'L';
  int info = 0;
  int lwork = -1;
  int liwork = -1;
  double work_query = 0.0;
  int iwork_query = 0;
  dsyevd_(&jobz, &uplo, &n, result.vectors.data(), &n, result.values.data(),
          &work_query, &lwork, &iwork_query, &liwork, &info);
  if (info != 0) {
    throw std::runtime_error("eig_sym: workspace query failed, info=" +
                             std::to_string(info));
  }
  lwork = static_cast<int>(work_query);
  liwork = iwork_query;
  std::vector<double> work(static_cast<std::size_t>(lwork));
  std::vector<int> iwork(static_cast<std::size_t>(liwork));
  dsyevd_(&jobz, &uplo, &n, result.vectors.data(), &n, result.values.data(),
          work.data(), &lwork, iwork.data(), &liwork, &info);
  if (info != 0) {
    throw std::runtime_error("eig_sym: dsyevd failed, info=" +
                             std::to_string(info));
  }
  return result;
}

}  // namespace motzkin::detail
