#pragma once

#include <alo_ipcm/alo_group.hpp>
#include <alo_ipcm/analysis.hpp>
#include <alo_ipcm/error.hpp>
#include <alo_ipcm/interval.hpp>
#include <alo_ipcm/io.hpp>
#include <alo_ipcm/ipcm.hpp>
#include <alo_ipcm/pcm.hpp>
