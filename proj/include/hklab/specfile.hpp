#ifndef HKLAB_SPECFILE_HPP
#define HKLAB_SPECFILE_HPP

#include <string>
#include <tuple>
#include <vector>

#include "hklab/ring.hpp"

namespace hklab {

// Declarations of a spec file, in source order.  Names are unique across all
// three kinds.
struct SpecDeclarations {
  std::vector<std::pair<std::string, RingPtr>> rings;
  // name, ring name, generators (in the ring's ambient context)
  std::vector<std::tuple<std::string, std::string, std::vector<Polynomial>>> ideals;
  std::vector<std::tuple<std::string, std::string, ModulePresentation>> modules;

  const RingPtr& find_ring(const std::string& name) const;
  const std::vector<Polynomial>& find_ideal(const std::string& name) const;
  const ModulePresentation& find_module(const std::string& name) const;
  // Ring the named ideal or module lives over.
  const std::string& ideal_ring(const std::string& name) const;
  const std::string& module_ring(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

// Parses the declaration language:
//   ring NAME = GF(P)[v1,...,vk] / (f1, ..., fs);   (the quotient is optional)
//   ideal NAME = (f1, ..., fs) in RING;
//   module NAME = coker RING [[a11,...],[a21,...],...];
//   module NAME = free RING n;
// '#' starts a comment.  Polynomials use integer coefficients, '*', '^',
// '+', '-' and parentheses.  Ring and ideal generators must have zero
// constant term; module matrix entries may be units.
SpecDeclarations parse_spec(const std::string& text);

// Canonical text form of the declarations; reparsing yields identical
// presentations.
std::string pretty_print_spec(const SpecDeclarations& decls);

// Replaces every standalone identifier token equal to name (outside '#'
// comments) with the decimal value; all other text is preserved.
std::string substitute_parameter(const std::string& text, const std::string& name,
                                 long value);

}  // namespace hklab

#endif
