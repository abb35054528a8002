#include "rvs/svg.hpp"

#include <fstream>

#include <fmt/format.h>

#include "rvs/error.hpp"

namespace rvs {

std::string SvgElement::attr(std::string_view key) const {
  for (const auto& [k, v] : attrs)
    if (k == key) return v;
  return {};
}

std::size_t SvgDoc::count(std::string_view tag, std::string_view cls) const {
  std::size_t n = 0;
  for (const auto& e : elements_)
    if (e.tag == tag && (cls.empty() || e.attr("class") == cls)) ++n;
  return n;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt_num(double x) {
  std::string s = fmt::format("{:.3f}", x);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string SvgDoc::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      fmt_num(width_), fmt_num(height_));
  for (const auto& e : elements_) {
    out += "  <" + e.tag;
    for (const auto& [k, v] : e.attrs) out += " " + k + "=\"" + xml_escape(v) + "\"";
    if (e.text.empty())
      out += "/>\n";
    else
      out += ">" + xml_escape(e.text) + "</" + e.tag + ">\n";
  }
  out += "</svg>\n";
  return out;
}

void SvgDoc::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::BadParams, "cannot write " + path);
  f << str();
}

}  // namespace rvs
