use voxsphere::circle;
use voxsphere::oracle;
use voxsphere::solid::{self, SolidLayers};
use voxsphere::sphere;
use voxsphere::{Pixel, Voxel};

#[test]
fn circles_and_discs_match_brute_force() {
    for r in 0..=100 {
        assert_eq!(circle::circle_pixels(r), oracle::circle(r), "circle {r}");
        assert_eq!(circle::disc_pixels(r), oracle::disc(r), "disc {r}");
        assert_eq!(circle::disc_absentees(r), oracle::disc_absentees(r), "absentees {r}");
        assert_eq!(circle::circle_size(r) as usize, oracle::circle(r).len());
        assert_eq!(circle::disc_absentee_count(r) as usize, oracle::disc_absentees(r).len());
    }
}

#[test]
fn concentric_circles_are_disjoint() {
    let mut seen = 0;
    for r in 0..=60 {
        seen += circle::circle_size(r);
        assert_eq!(circle::union_circles(r).len() as u64, seen);
    }
}

#[test]
fn generatrix_and_sweep() {
    for r in 0..=80 {
        let g: Vec<Pixel> = sphere::generatrix(r).points().iter().map(|v| Pixel::new(v.i, v.j)).collect();
        assert_eq!(g, oracle::generatrix(r), "r={r}");
        let hemi = sphere::sweep_hemisphere(r).len() as u64;
        assert_eq!(sphere::sphere_size(r), 2 * hemi - circle::circle_size(r), "r={r}");
        assert_eq!(sphere::sphere(r).len() as u64, sphere::sphere_size(r));
    }
    assert_eq!(sphere::sweep_hemisphere(10).len(), 529);
}

#[test]
fn hollow_absentees_match_definition() {
    for r in 0..=40 {
        assert_eq!(sphere::avh(r), oracle::hemisphere_absentees(r), "r={r}");
        assert_eq!(sphere::sphere_absentee_count(r) as usize, sphere::sphere_absentees(r).len());
    }
}

#[test]
fn complete_sphere_is_closed() {
    for r in 1..=20 {
        let c = sphere::complete_sphere(r);
        let inside = oracle::fill_enclosed(&c, i64::from(r) + 1);
        assert!(inside.contains(&Voxel::new(0, 0, 0)), "r={r}");
    }
}

#[test]
fn solids_match_flood_fill() {
    for r in 0..=20 {
        let layers = SolidLayers::new(r);
        assert_eq!(layers.solid(), solid::complete_solid(r), "r={r}");
        assert_eq!(layers.union(), solid::union_complete_spheres(r), "r={r}");
        let c = layers.counts();
        assert_eq!(c.total as usize, layers.solid().len());
        assert_eq!(c.primitive as usize, layers.union().len());
        let abs = layers.absentees();
        assert!(abs.lines.is_disjoint(&abs.circles));
        assert_eq!(abs.all(), solid::avs(r));
    }
}

#[test]
fn line_and_circle_procedures() {
    let line = solid::ab_line(1, 1, 1).unwrap();
    assert!(line.contains(&Voxel::new(1, 0, 1)) && line.contains(&Voxel::new(-1, -2, -1)));
    assert!(!line.contains(&Voxel::new(1, 3, 1)));
    assert!(solid::ab_line(1, 1, 2).is_err());
    assert!(solid::ab_line(1, 0, 1).is_err());

    assert_eq!(solid::ab_circle(1, 1).unwrap().len(), 8);
    let a = solid::ab_circle(2, 4).unwrap();
    let b = solid::ab_circle(4, 2).unwrap();
    assert!(a.iter().all(|v| v.j.abs() == 4) && b.iter().all(|v| v.j.abs() == 2));
    assert!(a.is_disjoint(&b));
    assert!(solid::ab_circle(1, 0).is_err());

    assert!(solid::is_absentee_line_voxel(Voxel::new(1, 0, 1)));
    assert!(!solid::is_absentee_line_voxel(Voxel::new(1, 3, 1)));
    assert!(!solid::is_absentee_line_voxel(Voxel::new(1, 0, 0)));
    assert!(solid::is_absentee_circle_voxel(Voxel::new(1, 1, 0)));
    assert!(solid::is_absentee_circle_voxel(Voxel::new(0, 1, 1)));
    assert!(!solid::is_absentee_circle_voxel(Voxel::new(1, 0, 0)));
}
