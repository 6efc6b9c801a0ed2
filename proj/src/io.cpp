#include "sqsq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include <json.hpp>

namespace sqsq {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

unsigned parse_unsigned(std::string_view s, const char* what) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw parse_error(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

json to_json(const Dissection& d) {
  json elems = json::array();
  for (const auto& e : d.elements)
    elems.push_back({{"x", e.x}, {"y", e.y}, {"s", e.s}});
  return {{"n", d.n}, {"elements", std::move(elems)}};
}

Dissection dissection_from_json(const json& j) {
  Dissection d;
  if (!j.is_object() || !j.contains("n") || !j.contains("elements"))
    throw parse_error("document must have 'n' and 'elements'");
  d.n = j.at("n").get<unsigned>();
  for (const auto& e : j.at("elements")) {
    d.elements.push_back({e.at("x").get<unsigned>(), e.at("y").get<unsigned>(),
                          e.at("s").get<unsigned>()});
  }
  return d;
}

json report_to_json(const EnumerationReport& report) {
  json reps = json::array();
  for (const auto& d : report.representatives) reps.push_back(to_json(d));
  json j = {{"n", report.n},
            {"raw_count", report.raw_count},
            {"canonical_count", report.canonical_count},
            {"reflection_pair_count", report.reflection_pair_count},
            {"nodes_expanded", report.nodes_expanded},
            {"wall_time_s", report.wall_time_s},
            {"labeled_digest", report.labeled_digest},
            {"representatives", std::move(reps)}};
  if (!report.labeled.empty()) {
    json lab = json::array();
    for (const auto& d : report.labeled) lab.push_back(to_json(d));
    j["labeled"] = std::move(lab);
  }
  return j;
}

}  // namespace

std::string emit_text(const DissectionDocument& doc) {
  std::string out;
  if (doc.metadata.source) out += "# source: " + *doc.metadata.source + "\n";
  if (doc.metadata.canonical)
    out += std::string("# canonical: ") + (*doc.metadata.canonical ? "yes" : "no") + "\n";
  out += "n=" + std::to_string(doc.dissection.n) + "\n";
  Dissection d = doc.dissection;
  normalize_scanline(d);
  for (const auto& e : d.elements) {
    out += std::to_string(e.x) + " " + std::to_string(e.y) + " " +
           std::to_string(e.s) + "\n";
  }
  return out;
}

DissectionDocument parse_text(std::string_view text) {
  DissectionDocument doc;
  bool have_header = false;
  std::size_t pos = 0;
  unsigned line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.rfind("source:", 0) == 0)
        doc.metadata.source = std::string(trim(body.substr(7)));
      else if (body.rfind("canonical:", 0) == 0) {
        const std::string_view v = trim(body.substr(10));
        if (v == "yes") doc.metadata.canonical = true;
        else if (v == "no") doc.metadata.canonical = false;
        else throw parse_error("line " + std::to_string(line_no) +
                               ": canonical must be yes or no");
      }
      continue;
    }
    if (!have_header) {
      if (line.rfind("n=", 0) != 0)
        throw parse_error("line " + std::to_string(line_no) +
                          ": expected 'n=<N>' header");
      doc.dissection.n = parse_unsigned(trim(line.substr(2)), "n");
      have_header = true;
      continue;
    }
    SquareElement e;
    unsigned* fields[3] = {&e.x, &e.y, &e.s};
    std::size_t field = 0, at = 0;
    while (at < line.size()) {
      while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
      if (at >= line.size()) break;
      std::size_t end = at;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      if (field >= 3)
        throw parse_error("line " + std::to_string(line_no) +
                          ": expected exactly 'x y s'");
      *fields[field++] = parse_unsigned(line.substr(at, end - at), "coordinate");
      at = end;
    }
    if (field != 3)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected exactly 'x y s'");
    doc.dissection.elements.push_back(e);
  }
  if (!have_header) throw parse_error("missing 'n=<N>' header");
  normalize_scanline(doc.dissection);
  return doc;
}

DissectionDocument parse_text_checked(std::string_view text) {
  DissectionDocument doc = parse_text(text);
  if (auto err = validity_error(doc.dissection))
    throw document_error("not an exact cover: " + *err);
  return doc;
}

std::string emit_json(const DissectionDocument& doc) {
  json j = {{"dissection", to_json(doc.dissection)}};
  json meta = json::object();
  if (doc.metadata.source) meta["source"] = *doc.metadata.source;
  if (doc.metadata.canonical) meta["canonical"] = *doc.metadata.canonical;
  if (!meta.empty()) j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

std::string emit_json(const EnumerationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string emit_json_reports(const std::vector<EnumerationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

DissectionDocument parse_json_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("bad json: ") + e.what());
  }
  try {
    DissectionDocument doc;
    doc.dissection = dissection_from_json(j.contains("dissection") ? j.at("dissection") : j);
    if (j.contains("metadata")) {
      const json& m = j.at("metadata");
      if (m.contains("source")) doc.metadata.source = m.at("source").get<std::string>();
      if (m.contains("canonical")) doc.metadata.canonical = m.at("canonical").get<bool>();
    }
    normalize_scanline(doc.dissection);
    return doc;
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad document: ") + e.what());
  }
}

std::string to_svg(const Dissection& d, unsigned cell_px) {
  if (cell_px < 1) cell_px = 1;
  const unsigned side = d.n * cell_px;
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%u\" "
                "height=\"%u\" viewBox=\"0 0 %u %u\">\n",
                side, side, side, side);
  out += buf;
  for (const auto& e : d.elements) {
    const unsigned px = e.x * cell_px;
    const unsigned py = (d.n - e.y - e.s) * cell_px;  // flip to screen y
    const unsigned ps = e.s * cell_px;
    std::snprintf(buf, sizeof buf,
                  "  <rect x=\"%u\" y=\"%u\" width=\"%u\" height=\"%u\" "
                  "fill=\"none\" stroke=\"black\"/>\n",
                  px, py, ps, ps);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%u\" y=\"%u\" font-size=\"%u\" "
                  "text-anchor=\"middle\" dominant-baseline=\"central\">%u"
                  "</text>\n",
                  px + ps / 2, py + ps / 2, std::max(1u, ps / 3), e.s);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

const Fixtures& fixtures() {
  static const Fixtures f = [] {
    Fixtures fx;
    fx.eleven.n = 11;
    fx.eleven.elements = {
        {0, 0, 4}, {4, 0, 3}, {7, 0, 4}, {4, 3, 2}, {6, 3, 1}, {0, 4, 3},
        {3, 4, 1}, {6, 4, 2}, {8, 4, 3}, {3, 5, 2}, {5, 5, 1}, {5, 6, 2},
        {7, 6, 1}, {0, 7, 4}, {4, 7, 1}, {7, 7, 4}, {4, 8, 3},
    };
    fx.sixteen.n = 16;
    fx.sixteen.elements = {
        {0, 0, 4},  {4, 0, 3},  {7, 0, 5},  {12, 0, 4}, {4, 3, 1},
        {5, 3, 2},  {0, 4, 5},  {12, 4, 1}, {13, 4, 3}, {5, 5, 6},
        {11, 5, 2}, {11, 7, 5}, {0, 9, 3},  {3, 9, 2},  {3, 11, 1},
        {4, 11, 5}, {9, 11, 2}, {0, 12, 4}, {11, 12, 1}, {12, 12, 4},
        {9, 13, 3},
    };
    return fx;
  }();
  return f;
}

}  // namespace sqsq
