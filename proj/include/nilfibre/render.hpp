#ifndef NILFIBRE_RENDER_HPP
#define NILFIBRE_RENDER_HPP

#include <string>

#include <json.hpp>

#include "nilfibre/census.hpp"
#include "nilfibre/reverse.hpp"
#include "nilfibre/symalg.hpp"
#include "nilfibre/verify.hpp"

namespace nilfibre {

using Json = nlohmann::ordered_json;

// One line per row, red entries as [j], columns padded to a common width.
std::string render_tableau(const ColoredTableau& t);

// "pair=C2-C3;source=C3;stop=C2"
std::string choice_script(const NeighbouringPair& p, const ImplementationChoice& ch);

Json to_json(const Polynomial& p);
Json to_json(const ColoredTableau& t);
Json to_json(const ImplementationTrace& trace);
Json to_json(const Census& census);
Json to_json(const VerificationSummary& summary);
Json to_json(const RootSet& roots);

std::string dump(const Json& j);

}  // namespace nilfibre

#endif  // NILFIBRE_RENDER_HPP
