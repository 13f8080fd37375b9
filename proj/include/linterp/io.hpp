// Text file formats: code descriptors, element vectors, subspace bases.
#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "linterp/gabidulin.hpp"
#include "linterp/kk.hpp"
#include "linterp/mv.hpp"

namespace linterp {

// Descriptor files start with a kind token: "gabidulin", "kk", or "mv".
//   gabidulin q m c0,c1,...,cm n k g0 g1 ... g(n-1)
//   kk        q m c0,c1,...,cm l k a0 a1 ... a(l-1)
//   mv        q m l k L gamma    (second line: big-field modulus c0,...,c(ml))
using CodeDescriptor = std::variant<GabidulinCode, KKCode, MVCode>;

CodeDescriptor read_code(const std::string& path);
void write_code(const std::string& path, const CodeDescriptor& code);

std::string modulus_token(const std::vector<uint8_t>& modulus);
std::vector<uint8_t> parse_modulus(const std::string& token);

// Element vectors: whitespace-separated tokens in the field text format.
std::vector<FieldElement> read_vector(const std::string& path, const Field* f);
void write_vector(const std::string& path, const std::vector<FieldElement>& v);

// GF(q) digit vectors (MV messages): whitespace-separated digits.
std::vector<uint8_t> read_digits(const std::string& path);
void write_digits(const std::string& path, const std::vector<uint8_t>& v);

// Subspace file: "ambient_dim rank" header, then RREF rows as digit strings.
SubspaceBasis read_subspace(const std::string& path, uint32_t q);
void write_subspace(const std::string& path, const SubspaceBasis& s);

}  // namespace linterp
