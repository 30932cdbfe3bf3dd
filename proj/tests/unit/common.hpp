#pragma once

#include "qvt/cartan.hpp"
#include "qvt/freealg.hpp"
#include "qvt/parse.hpp"

namespace testing_support {

inline qvt::RatFunc P(const char* s) { return qvt::parse_coeff(s); }

inline qvt::Cartan a2() { return qvt::make_cartan({{1, -1}, {0, 1}}); }
inline qvt::Cartan a2_opposite() { return qvt::make_cartan({{1, 0}, {-1, 1}}); }
inline qvt::Cartan a1() { return qvt::make_cartan({{1}}); }

inline qvt::FreeElem W(const qvt::Cartan& c, std::initializer_list<int> w, const char* coeff = "1") {
  return qvt::FreeElem::word(c, qvt::make_word(w), P(coeff));
}

// Every word of length at most n over the vertex set of c.
inline std::vector<qvt::Word> words_up_to(const qvt::Cartan& c, int n) {
  std::vector<qvt::Word> out{qvt::Word()};
  std::size_t begin = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i < c->rank(); ++i) out.push_back(out[k] + static_cast<char>(i));
    begin = end;
  }
  return out;
}

}  // namespace testing_support
