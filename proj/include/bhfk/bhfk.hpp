#pragma once

#include "bhfk/idempotent.hpp"
#include "bhfk/monomial.hpp"
#include "bhfk/algebra.hpp"
#include "bhfk/rewrite.hpp"
#include "bhfk/algebra_checks.hpp"
#include "bhfk/pattern.hpp"
#include "bhfk/bimodule.hpp"
#include "bhfk/relations.hpp"
#include "bhfk/grading.hpp"
#include "bhfk/box_tensor.hpp"
#include "bhfk/corpus.hpp"
#include "bhfk/displays.hpp"
#include "bhfk/isomorphism.hpp"
#include "bhfk/fit.hpp"
#include "bhfk/latex.hpp"
#include "bhfk/json_io.hpp"
#include "bhfk/reproduce.hpp"
#include "bhfk/render.hpp"
