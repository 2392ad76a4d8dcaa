"""Full ground-truth extraction: depth, segmentation, dense coordinates,
projected keypoints with visibility, Gaussian heatmaps, 2D box.

Also verifies in place what the `check` command verifies on disk: mask
equivalence and sub-half-pixel reprojection of the dense coordinates.
"""

import numpy as np

from satforge import (
    Ambient,
    CameraModel,
    Material,
    Pose,
    Quaternion,
    SceneConfig,
    Sunlight,
    build_bvh,
    extract_labels,
    make_heatmaps,
    render_frame,
)
from satforge.labels import project_points
from satforge.models import make_satellite
from demo_helpers import outdir, save_coords_png, save_gray_png, save_rgb_png
from satforge.formats import write_png, write_segmentation

out = outdir("04_ground_truth")
mesh, keypoints = make_satellite()
bvh = build_bvh(mesh)
materials = (Material(), Material(albedo=(0.3, 0.35, 0.6)))
camera = CameraModel(width=384, height=384, fx=420.0, fy=420.0, cx=192.0, cy=192.0)
scene = SceneConfig(camera=camera,
                    lights=(Sunlight(direction=np.array([0.3, -0.3, 1.0]) /
                                     np.linalg.norm([0.3, -0.3, 1.0]), intensity=4.0),
                            Ambient(0.05)))
pose = Pose(Quaternion.from_axis_angle((0.2, 1.0, 0.3), 1.2), np.array([0.05, 0.1, 3.4]))

buffers = render_frame(mesh, bvh, pose, scene, materials)
gt = extract_labels(buffers, pose, camera, keypoints)

save_rgb_png(out / "render.png", buffers.color)
save_gray_png(out / "depth.png", gt.depth)
write_segmentation(out / "segmentation.png", gt.segmentation)
save_coords_png(out / "dense_coords.png", gt.dense_coords)

print(f"bounding box (umin, vmin, umax, vmax): {gt.bbox}")
for kp in gt.keypoints2d:
    name = keypoints.keypoints[kp.id].name
    print(f"  kp {kp.id:2d} {name:10s} -> ({kp.u:7.2f}, {kp.v:7.2f}) "
          f"{'visible' if kp.visible else 'hidden'}")

# the invariants the dataset checker enforces, demonstrated in memory
fg = gt.segmentation.astype(bool)
assert np.array_equal(fg, np.isfinite(gt.depth))
assert np.array_equal(fg, np.isfinite(gt.dense_coords).all(axis=2))
rows, cols = np.nonzero(fg)
u, v, _ = project_points(camera, pose, gt.dense_coords[rows, cols])
err = np.hypot(u - (cols + 0.5), v - (rows + 0.5))
print(f"dense-coords reprojection: max {err.max():.2e} px over {len(err)} foreground pixels")

heat = make_heatmaps(gt.keypoints2d, camera.width, camera.height, sigma=7.0)
combined = heat.values.max(axis=2)
save_gray_png(out / "heatmaps_max.png", combined, lo=0.0, hi=1.0)
overlay = buffers.color.copy()
overlay[:, :, 0] = np.maximum(overlay[:, :, 0], combined * 2.0)
save_rgb_png(out / "heatmap_overlay.png", overlay)
print(f"heatmap tensor shape (M, N, C): {heat.values.shape}")
print(f"wrote label maps to {out}")
