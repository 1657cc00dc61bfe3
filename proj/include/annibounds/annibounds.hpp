#pragma once

#include "annibounds/errors.hpp"
#include "annibounds/field.hpp"
#include "annibounds/ring.hpp"
#include "annibounds/polynomial.hpp"
#include "annibounds/groebner.hpp"
#include "annibounds/ideal.hpp"
#include "annibounds/module.hpp"
#include "annibounds/decomposition.hpp"
#include "annibounds/bounds.hpp"
#include "annibounds/truncated.hpp"
#include "annibounds/session.hpp"
