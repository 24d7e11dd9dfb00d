#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "tistim/types.hpp"

namespace tistim {

/// Streaming SHA-256; `hex()` finalizes.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(const void* data, std::size_t bytes);
  Sha256& update(std::string_view s) { return update(s.data(), s.size()); }
  template <typename Derived>
  Sha256& update(const Eigen::DenseBase<Derived>& m) {
    const typename Derived::PlainObject plain = m;
    return update(plain.data(), sizeof(typename Derived::Scalar) * static_cast<std::size_t>(plain.size()));
  }
  std::string hex();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view data);

}  // namespace tistim
