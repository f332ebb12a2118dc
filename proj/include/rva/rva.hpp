#pragma once

#include "rva/alphabet.hpp"
#include "rva/automaton.hpp"
#include "rva/encoding.hpp"
#include "rva/fixing.hpp"
#include "rva/generators.hpp"
#include "rva/io.hpp"
#include "rva/language_shape.hpp"
#include "rva/minimization.hpp"
#include "rva/oracle.hpp"
#include "rva/partition.hpp"
#include "rva/rva_check.hpp"
#include "rva/verdict.hpp"
