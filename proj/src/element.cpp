#include "ering/element.hpp"

#include <sstream>

namespace ering {

Element::Element(Element first, Element second)
    : rep_(std::make_shared<const std::pair<Element, Element>>(std::move(first), std::move(second))) {}

bool operator==(const Element& a, const Element& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (a.is_pair()) return a.first() == b.first() && a.second() == b.second();
  return a.rep_ == b.rep_;
}

std::string Element::to_string() const {
  if (is_matrix()) return matrix().to_string();
  if (is_pair()) return "<" + first().to_string() + " | " + second().to_string() + ">";
  std::ostringstream os;
  os << '(';
  const auto& v = values();
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace ering
