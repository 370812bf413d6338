#pragma once

#include "gf2circ/bits.hpp"
#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/circuit/netlist.hpp"
#include "gf2circ/circuit/resources.hpp"
#include "gf2circ/circuit/schedule.hpp"
#include "gf2circ/circuit/simulate.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/element.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/gaussian.hpp"
#include "gf2circ/field/ghost_bit.hpp"
#include "gf2circ/field/gnb_isomorphism.hpp"
#include "gf2circ/field/itoh_tsujii.hpp"
#include "gf2circ/field/polynomial.hpp"
#include "gf2circ/invert/bounds.hpp"
#include "gf2circ/invert/inverter.hpp"
#include "gf2circ/number_theory.hpp"
#include "gf2circ/synth/cancel.hpp"
#include "gf2circ/synth/multipliers.hpp"
#include "gf2circ/synth/permutation.hpp"
