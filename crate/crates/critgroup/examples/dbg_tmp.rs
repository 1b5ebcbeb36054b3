use critgroup::{snf, IntMatrix};
use critgroup::matforms::inflate;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    let mut a = IntMatrix::identity(1);
    let mut b = IntMatrix::identity(1);
    for _m in 2u64..=4 {
        for nn in 1usize..=2 {
            a = IntMatrix::from_fn(nn, nn, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
            b = IntMatrix::from_fn(nn, nn, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
        }
    }
    println!("A={a:?}\nB={b:?}");
    let m = inflate(4, &a, &b).unwrap();
    println!("M={m:?}");
    let s = snf(&m);
    println!("snf={:?}", s.diagonal);
}
