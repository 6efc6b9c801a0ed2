#pragma once
// Interchange formats: the line-oriented text format, JSON mirrors of the
// document and report types, SVG rendering, and the two built-in reference
// dissections.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sqsq/enumerate.hpp"
#include "sqsq/geometry.hpp"

namespace sqsq {

struct DocumentMetadata {
  std::optional<std::string> source;
  std::optional<bool> canonical;
  friend bool operator==(const DocumentMetadata&, const DocumentMetadata&) = default;
};

struct DissectionDocument {
  Dissection dissection;
  DocumentMetadata metadata;
  friend bool operator==(const DissectionDocument&, const DissectionDocument&) = default;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: optional '#' comment lines, a "n=<N>" header, then one
// "x y s" triple per line in scanline order.  Metadata round-trips through
// "# source: ..." and "# canonical: yes|no" comment lines.
std::string emit_text(const DissectionDocument& doc);
DissectionDocument parse_text(std::string_view text);

// Checked parse: also rejects documents that are not exact covers.
DissectionDocument parse_text_checked(std::string_view text);

std::string emit_json(const DissectionDocument& doc);
std::string emit_json(const EnumerationReport& report);
std::string emit_json_reports(const std::vector<EnumerationReport>& reports);
DissectionDocument parse_json_document(std::string_view text);

// One rect per element (integer pixel coordinates, y flipped to screen
// orientation) with the size label centered in it.
std::string to_svg(const Dissection& d, unsigned cell_px = 32);

// The two reference dissections: the unique nontrivial squared squares of
// sizes 11 and 16.
struct Fixtures {
  Dissection eleven;
  Dissection sixteen;
};
const Fixtures& fixtures();

}  // namespace sqsq
