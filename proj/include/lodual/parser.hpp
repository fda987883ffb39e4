#ifndef LODUAL_PARSER_HPP
#define LODUAL_PARSER_HPP

#include "lodual/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lodual {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Contents of an input file: named rings, modules and complexes.
///
/// Format (line oriented, '#' comments):
///
///   ring A
///     gen x 2
///     gen y 2
///   end
///
///   module M over A
///     generators 0 2
///     relation x^2, -1/2*y
///   end
///
///   complex C over A
///     term 0 : 0
///     term 1 : 2 2
///     d 1 : x , y        # rows split by ';', columns by ','
///   end
struct ParsedFile {
    std::vector<std::pair<std::string, RingPtr>> rings;
    std::vector<std::pair<std::string, GradedModulePresentation>> modules;
    std::vector<std::pair<std::string, FreeComplex>> complexes;

    RingPtr ring(const std::string& name) const;
    const GradedModulePresentation* module(const std::string& name) const;
    const FreeComplex* complex(const std::string& name) const;
};

ParsedFile parse_input(const std::string& text);
ParsedFile parse_file(const std::string& path);

/// Polynomial expression over the ring generators: rational coefficients,
/// '*', '^', '+', '-', parentheses.
PolynomialElement parse_polynomial(const std::string& text, const RingPtr& ring, int line = 0,
                                   int column_offset = 0);

} // namespace lodual

#endif
