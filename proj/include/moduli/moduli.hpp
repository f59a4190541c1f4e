#ifndef MODULI_MODULI_HPP
#define MODULI_MODULI_HPP

// Umbrella header for the arrangement-moduli library.

#include <moduli/arrangement.hpp>
#include <moduli/bigint.hpp>
#include <moduli/chow_ring.hpp>
#include <moduli/enumeration.hpp>
#include <moduli/incidence.hpp>
#include <moduli/rational_linalg.hpp>
#include <moduli/schubert.hpp>

#endif // MODULI_MODULI_HPP
