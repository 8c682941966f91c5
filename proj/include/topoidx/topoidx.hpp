#pragma once

#include "topoidx/closed_forms.hpp"
#include "topoidx/errors.hpp"
#include "topoidx/factored.hpp"
#include "topoidx/families.hpp"
#include "topoidx/generators.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/index_engine.hpp"
#include "topoidx/verify.hpp"
