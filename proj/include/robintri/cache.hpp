#ifndef ROBINTRI_CACHE_HPP
#define ROBINTRI_CACHE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

namespace robintri {

/// On-disk memo of solved triples, one text record per line:
///   h sigma m n tol L M N lambda
/// printed with 17 significant digits so reloads are bit-exact. Lookups are
/// keyed on the exact (h, sigma, m, n, tol) tuple.
class EigenvalueCache {
public:
  struct Entry {
    double L, M, N, lambda;
  };

  EigenvalueCache() = default;
  explicit EigenvalueCache(std::string path); // loads existing records

  std::optional<Entry> lookup(double h, double sigma, int m, int n,
                              double tol) const;
  void insert(double h, double sigma, int m, int n, double tol,
              const Entry& e);

  std::size_t size() const { return records_.size(); }
  const std::string& path() const { return path_; }

private:
  using Key = std::tuple<double, double, int, int, double>;
  std::string path_;
  std::map<Key, Entry> records_;
  mutable std::mutex mutex_;
};

} // namespace robintri

#endif // ROBINTRI_CACHE_HPP
