#include "fixglue/util.hpp"

namespace fixglue {

std::string product_decimal(const std::vector<uint64_t>& factors) {
  // little-endian base-1e9 digits
  std::vector<uint32_t> digits{1};
  for (uint64_t f : factors) {
    uint64_t lo = f % 1000000000ull, hi = f / 1000000000ull;
    // multiply by f = hi*1e9 + lo
    std::vector<uint32_t> out(digits.size() + 3, 0);
    auto add_mul = [&](uint64_t m, size_t shift) {
      if (m == 0) return;
      uint64_t carry = 0;
      for (size_t i = 0; i < digits.size() || carry; ++i) {
        uint64_t cur = out[i + shift] + carry;
        if (i < digits.size()) cur += digits[i] * m;
        out[i + shift] = static_cast<uint32_t>(cur % 1000000000ull);
        carry = cur / 1000000000ull;
      }
    };
    add_mul(lo, 0);
    add_mul(hi, 1);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    digits = std::move(out);
  }
  std::string s = std::to_string(digits.back());
  for (size_t i = digits.size() - 1; i-- > 0;) {
    std::string part = std::to_string(digits[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

bool checked_product(const std::vector<uint64_t>& factors, uint64_t& out) {
  out = 1;
  for (uint64_t f : factors) {
    if (f != 0 && out > UINT64_MAX / f) return false;
    out *= f;
  }
  return true;
}

}  // namespace fixglue
