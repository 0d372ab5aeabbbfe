/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SAVES_PNG_IO_HPP_
#define SAVES_PNG_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "saves/depth_map.hpp"

namespace saves {

// Depth maps travel as single-channel 16-bit PNGs: stored = depth * 256,
// stored 0 marks an invalid pixel. This is the encoding used by the KITTI
// depth benchmark tooling; both functions are bit-exact with it.

// Throws kParse ("unsupported PNG layout") on anything but 16-bit grayscale,
// kIo ("not found") on a missing file.
DepthMap ReadDepthPng(const std::string& path);
DepthMap DecodeDepthPng(const std::uint8_t* data, std::size_t size);

// Quantizes valid depths to 1/256 m (round to nearest). Depths that would
// round above 65535 throw kInvalidArgument ("depth exceeds encodable
// range"); callers mask first. Depths below 1/512 m round to the invalid
// sentinel 0. Encoder settings are fixed, so identical maps produce
// byte-identical files.
void WriteDepthPng(const DepthMap& map, const std::string& path);
std::vector<std::uint8_t> EncodeDepthPng(const DepthMap& map);

}  // namespace saves

#endif  // SAVES_PNG_IO_HPP_
