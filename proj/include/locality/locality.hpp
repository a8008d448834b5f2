#pragma once

#include "locality/model.hpp"
#include "locality/normalize.hpp"
#include "locality/interpretation.hpp"
#include "locality/oracle.hpp"
#include "locality/tableau.hpp"
#include "locality/semantic.hpp"
#include "locality/syntactic.hpp"
#include "locality/extractor.hpp"
#include "locality/parser.hpp"
#include "locality/harness.hpp"
