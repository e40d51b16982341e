#include "circulant/classification.hpp"

#include <sstream>

namespace circulant {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view tag_name(const Classification& c) noexcept {
  return std::visit(
      overloaded{
          [](const verdict::Identical&) { return std::string_view("identical"); },
          [](const verdict::Type1&) { return std::string_view("type1"); },
          [](const verdict::Type2&) { return std::string_view("type2"); },
          [](const verdict::Type1AfterType2&) {
            return std::string_view("type1-after-type2");
          },
          [](const verdict::IsomorphicOther&) {
            return std::string_view("isomorphic-other");
          },
          [](const verdict::NotIsomorphic&) { return std::string_view("not-isomorphic"); },
          [](const verdict::NonCirculantImage&) {
            return std::string_view("non-circulant");
          },
      },
      c);
}

std::string describe(const Classification& c) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const verdict::Identical&) { out << "Identical"; },
                 [&](const verdict::Type1& v) { out << "Type1 x=" << v.x; },
                 [&](const verdict::Type2& v) {
                   out << "Type2 m=" << v.m << " t=" << v.t;
                   if (v.reversed) out << " (applied to second graph)";
                 },
                 [&](const verdict::Type1AfterType2& v) {
                   out << "Type1AfterType2 x=" << v.x << " m=" << v.m << " t=" << v.t;
                 },
                 [&](const verdict::IsomorphicOther& v) {
                   out << "IsomorphicOther permutation=[";
                   for (std::size_t i = 0; i < v.permutation.size(); ++i) {
                     out << (i ? "," : "") << v.permutation[i];
                   }
                   out << ']';
                 },
                 [&](const verdict::NotIsomorphic& v) {
                   out << "NotIsomorphic: " << v.reason;
                 },
                 [&](const verdict::NonCirculantImage&) { out << "NonCirculantImage"; },
             },
             c);
  return out.str();
}

}  // namespace circulant
