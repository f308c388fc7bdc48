// Line-oriented text formats for monoids and recognisers, with # comments.
// The order is given by generating pairs and closed reflexively and
// transitively at load; sharp entries are only accepted on idempotents.

#ifndef COSTFN_IO_HPP
#define COSTFN_IO_HPP

#include <iosfwd>
#include <string>

#include "costfn/monoid.hpp"
#include "costfn/recogniser.hpp"

namespace costfn {

stab_monoid load_monoid(std::istream& in);
stab_monoid load_monoid_file(const std::string& path);
void save_monoid(std::ostream& out, const stab_monoid& m);
void save_monoid_file(const std::string& path, const stab_monoid& m);

recogniser load_recogniser(std::istream& in);
recogniser load_recogniser_file(const std::string& path);
void save_recogniser(std::ostream& out, const recogniser& r);
void save_recogniser_file(const std::string& path, const recogniser& r);

}  // namespace costfn

#endif  // COSTFN_IO_HPP
