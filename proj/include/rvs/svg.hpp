#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rvs {

struct SvgElement {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::string text;

  std::string attr(std::string_view key) const;
};

/// Flat list of SVG 1.1 elements under a single root.
class SvgDoc {
 public:
  SvgDoc(double width, double height) : width_(width), height_(height) {}

  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  const std::vector<SvgElement>& elements() const noexcept { return elements_; }

  void add(SvgElement e) { elements_.push_back(std::move(e)); }
  /// Elements with the given tag and, if nonempty, class.
  std::size_t count(std::string_view tag, std::string_view cls = {}) const;

  std::string str() const;
  void save(const std::string& path) const;

 private:
  double width_;
  double height_;
  std::vector<SvgElement> elements_;
};

std::string xml_escape(std::string_view s);
std::string fmt_num(double x);

}  // namespace rvs
