#ifndef LIEQUAD_LIEQUAD_HPP
#define LIEQUAD_LIEQUAD_HPP

// Umbrella header.

#include "liequad/commands.hpp"
#include "liequad/error.hpp"
#include "liequad/form.hpp"
#include "liequad/free_lie.hpp"
#include "liequad/integer.hpp"
#include "liequad/io.hpp"
#include "liequad/multibracket.hpp"
#include "liequad/positivity.hpp"
#include "liequad/relation_set.hpp"
#include "liequad/relations.hpp"
#include "liequad/roots.hpp"
#include "liequad/row_space.hpp"
#include "liequad/tensor_poly.hpp"
#include "liequad/verify.hpp"

#endif  // LIEQUAD_LIEQUAD_HPP
