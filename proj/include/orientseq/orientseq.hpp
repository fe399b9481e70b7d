#pragma once

#include "orientseq/brute_force.hpp"
#include "orientseq/counting.hpp"
#include "orientseq/cycle_join_tree.hpp"
#include "orientseq/necklace_enum.hpp"
#include "orientseq/os2.hpp"
#include "orientseq/parent_rules.hpp"
#include "orientseq/render.hpp"
#include "orientseq/successor.hpp"
#include "orientseq/verify.hpp"
#include "orientseq/word.hpp"
