#include "robintri/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace robintri {

EigenvalueCache::EigenvalueCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    double h, sigma, tol;
    int m, n;
    Entry e;
    if (ls >> h >> sigma >> m >> n >> tol >> e.L >> e.M >> e.N >> e.lambda)
      records_[Key{h, sigma, m, n, tol}] = e;
  }
}

std::optional<EigenvalueCache::Entry>
EigenvalueCache::lookup(double h, double sigma, int m, int n,
                        double tol) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = records_.find(Key{h, sigma, m, n, tol});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void EigenvalueCache::insert(double h, double sigma, int m, int n, double tol,
                             const Entry& e) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, fresh] = records_.insert({Key{h, sigma, m, n, tol}, e});
  if (!fresh || path_.empty()) return;
  // One whole line per record, flushed immediately.
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%.17g %.17g %d %d %.17g %.17g %.17g %.17g %.17g\n", h, sigma,
                m, n, tol, e.L, e.M, e.N, e.lambda);
  std::ofstream out(path_, std::ios::app);
  out << buf;
  out.flush();
}

} // namespace robintri
