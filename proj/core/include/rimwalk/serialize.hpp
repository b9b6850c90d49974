#ifndef RIMWALK_SERIALIZE_HPP
#define RIMWALK_SERIALIZE_HPP

#include <ostream>

#include <nlohmann/json.hpp>

#include "rimwalk/bigint.hpp"
#include "rimwalk/character.hpp"
#include "rimwalk/identities.hpp"
#include "rimwalk/partition.hpp"
#include "rimwalk/strip.hpp"
#include "rimwalk/virtual_character.hpp"

// JSON and TSV renderings. Objects keep insertion order so output is
// byte-for-byte reproducible.
namespace rimwalk::io {

using Json = nlohmann::ordered_json;

/// A JSON number when it fits in 64 bits, else a decimal string.
Json to_json(const BigInt& v);
/// [3,1]; the empty partition is [].
Json to_json(const Partition& p);
Json to_json(const IntPolynomial& p);
/// {"inner":[..],"outer":[..],"height":h,"length":s}
Json to_json(const BorderStrip& s);
/// {"k":k,"order":[..],"table":[[..]],"centralizers":[..]}
Json to_json(const CharacterTable& t);
/// {"k":..,"n":..,"checked":..,"mismatches":[{"nu","mu","lhs","rhs"},..]}
/// followed by "target", "in_range" and "pass".
Json to_json(const VerificationReport& r);
Json to_json(const OrthogonalityReport& r);
/// {"n","multiplicity","q_at_minus1","positive","unimodal","palindromic"}
/// followed by "quotient" and "consistent".
Json to_json(const ConjectureRow& row);
Json to_json(const IdentityCheck& c);
Json to_json(const VirtualCharacter& psi);

Partition partition_from_json(const Json& j);

/// Header row and column hold the canonical order in "3,1" / "empty" form.
void write_tsv(std::ostream& os, const CharacterTable& t);

}  // namespace rimwalk::io

#endif  // RIMWALK_SERIALIZE_HPP
