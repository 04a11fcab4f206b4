#pragma once

#include <optional>
#include <string>

#include "hopfd2/catalog.hpp"

namespace hopfd2 {

/// Malformed document. where is a line/column or a JSON pointer.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// A structure-constant document: a Frobenius extension or a Hopf algebroid
/// with a right integral. Rationals are written "p/q", F_p scalars as
/// residues with the modulus in the header.
struct Document {
    std::string name;
    Field field;
    std::optional<FrobeniusExtension> extension;
    std::optional<HopfExample> hopf;

    bool is_extension() const { return extension.has_value(); }
};

/// Throws ParseError on syntax or shape errors. Algebraic axioms are not
/// checked here.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

std::string emit_document(const FrobeniusExtension& e);
std::string emit_document(const HopfExample& h);
std::string emit_document(const Document& d);

/// catalog name → document
Document catalog_document(const std::string& name, const Field& f = Field{});
std::vector<std::string> catalog_names();

}  // namespace hopfd2
