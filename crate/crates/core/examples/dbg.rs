use blasius_core::bounds::*;
use blasius_core::exact::rational::*;
use blasius_core::quasi::inner;
use num_traits::Zero;
fn main() {
    let grid = SubregionGrid::published();
    let q = inner();
    for (name, g) in [("G1", &q.g1), ("G2", &q.g2), ("G3", &q.g3)] {
        let da = g.da();
        // per x-cell upper bound of the parameter derivative
        for w in grid.x_knots.windows(2) {
            let rep = taylor_bound(&da, &w[0], &w[1], &grid).unwrap();
            if !num_traits::Signed::is_negative(&rep.upper) {
                println!("{name} d/da upper not negative on [{}, {}]: {:.4e}", w[0], w[1], f64_hi(&rep.upper));
            }
        }
        // sample the true derivative to see if it's genuinely negative
        let mut worst = rat_dec("-1000");
        for i in 0..=250i64 {
            for j in 0..=10i64 {
                let x = rat(5*i, 500);
                let a = rat(-3, 50) + rat(6*j, 500);
                let v = da.eval(&x, &a);
                if v > worst { worst = v; }
            }
        }
        println!("{name}: sampled max of d/da = {:.4e}", f64_hi(&worst));
        let _ = Rational::zero();
    }
}
