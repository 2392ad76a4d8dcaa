"""Rendering one frame: lighting presets, shadows, ambient occlusion,
lens distortion.

Renders the built-in satellite under a sun + ambient rig, then toggles
shadows, ambient occlusion and a fisheye-ish distortion to show their
effect. Outputs land in demos/out/02_render_frame/.
"""

from dataclasses import replace

import numpy as np

from satforge import (
    Ambient,
    CameraModel,
    Material,
    Pose,
    Quaternion,
    SceneConfig,
    Spotlight,
    Sunlight,
    build_bvh,
    render_frame,
)
from satforge import rng as rngmod
from demo_helpers import outdir, save_gray_png, save_rgb_png
from satforge.models import make_satellite

out = outdir("02_render_frame")
mesh, _ = make_satellite()
bvh = build_bvh(mesh)
materials = (
    Material(albedo=(0.75, 0.72, 0.68)),
    Material(albedo=(0.25, 0.3, 0.55), specular_strength=0.7, shininess=96.0, high_quality=True),
)

camera = CameraModel(width=384, height=384, fx=450.0, fy=450.0, cx=192.0, cy=192.0)
sun = Sunlight(direction=np.array([0.45, -0.35, 0.82]) / np.linalg.norm([0.45, -0.35, 0.82]),
               intensity=4.5)
scene = SceneConfig(camera=camera, lights=(sun, Ambient(0.06)), shadows=True,
                    ambient_occlusion=True, ao_samples=16)
pose = Pose(Quaternion.from_axis_angle((0.3, 1.0, 0.15), 0.9), np.array([0.1, -0.05, 3.6]))

fb = render_frame(mesh, bvh, pose, scene, materials, frame_key=rngmod.pixel_hash_key(0, "demo", 2))
save_rgb_png(out / "render.png", fb.color)
save_gray_png(out / "depth.png", fb.depth)
fg = np.isfinite(fb.depth)
print(f"foreground pixels: {fg.sum()} / {fg.size}")
print(f"depth range: [{fb.depth[fg].min():.2f}, {fb.depth[fg].max():.2f}] m")

no_shadows = render_frame(mesh, bvh, pose, replace(scene, shadows=False), materials,
                          frame_key=rngmod.pixel_hash_key(0, "demo", 2))
save_rgb_png(out / "render_no_shadows.png", no_shadows.color)
changed = np.any(no_shadows.color != fb.color, axis=2)
print(f"pixels changed by disabling shadows: {changed.sum()}")

spot_dir = np.array([-0.17, 0.17, 0.97])
spot = Spotlight(position=np.array([0.8, -0.8, 0.0]), direction=spot_dir / np.linalg.norm(spot_dir),
                 cone_half_angle=np.radians(18), intensity=9.0)
spot_scene = replace(scene, lights=(spot, Ambient(0.02)))
save_rgb_png(out / "render_spotlight.png",
             render_frame(mesh, bvh, pose, spot_scene, materials,
                          frame_key=rngmod.pixel_hash_key(0, "demo", 2)).color)

fisheye = CameraModel(width=384, height=384, fx=450.0, fy=450.0, cx=192.0, cy=192.0,
                      k1=-0.35, k2=0.12)
save_rgb_png(out / "render_distorted.png",
             render_frame(mesh, bvh, pose, replace(scene, camera=fisheye), materials,
                          frame_key=rngmod.pixel_hash_key(0, "demo", 2)).color)

print(f"wrote renders to {out}")
