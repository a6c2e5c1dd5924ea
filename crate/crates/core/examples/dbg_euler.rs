// debug: find the triangle where euler vs excess disagree
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transgeo::form::bilinear_form;
use transgeo::metric::distance;
use transgeo::point::normalize_point;
use transgeo::triangle::{measure, Triangle};
use transgeo::trig::area_euler;
use transgeo::{ModelPoint, Param, Vec3};

fn sample_point(r: &mut ChaCha8Rng, par: Param, radius: f64) -> ModelPoint {
    let cap = if par.is_negative() { radius.min(0.85 / par.sqrt_abs()) } else { radius };
    loop {
        let v = Vec3::new(r.random_range(-cap..cap), r.random_range(-cap..cap), 1.0);
        if transgeo::quad_form(par, v) > 0.1 {
            return normalize_point(par, v).unwrap();
        }
    }
}

fn main() {
    let mut r = ChaCha8Rng::seed_from_u64(501);
    for &t in &[0.25, 1.0] {
        let par = Param::new(t).unwrap();
        for i in 0..50 {
            // replicate sample_triangle
            let tr = loop {
                let a = sample_point(&mut r, par, 1.0);
                let b = sample_point(&mut r, par, 1.0);
                let c = sample_point(&mut r, par, 1.0);
                let min_side = distance(&a, &b).value().min(distance(&b, &c).value()).min(distance(&c, &a).value());
                if min_side < 0.3 { continue; }
                if par.is_positive() && [(&a,&b),(&b,&c),(&c,&a)].iter().any(|(u,v)| bilinear_form(par, u.rep(), v.rep()).abs() < 0.05) { continue; }
                let Ok(tr) = Triangle::new(a, b, c) else { continue };
                let m = measure(&tr).unwrap();
                if m.angle_a.min(m.angle_b).min(m.angle_c) > 0.2 { break tr; }
            };
            let m = measure(&tr).unwrap();
            let e = area_euler(par, m.side_a, m.side_b, m.side_c).unwrap();
            if (e - m.area).abs() > 1e-9 {
                println!("t={t} i={i}: gap {:.3e}", (e - m.area).abs());
                println!("  sides {} {} {}", m.side_a, m.side_b, m.side_c);
                println!("  scaled {} {} {}", t.sqrt()*m.side_a, t.sqrt()*m.side_b, t.sqrt()*m.side_c);
                println!("  angles {} {} {} sum-pi {}", m.angle_a, m.angle_b, m.angle_c, m.angle_a+m.angle_b+m.angle_c-std::f64::consts::PI);
                println!("  excess area {}  euler {}", m.area, e);
                println!("  verts A={:?} B={:?} C={:?}", tr.a().rep(), tr.b().rep(), tr.c().rep());
                return;
            }
        }
    }
    println!("no gap found");
}
