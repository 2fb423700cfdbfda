//! Step-by-step insertion algorithms for the three families.

use springer::constructibility::{construct_hook, construct_two_col, construct_two_row};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("two rows:");
    let trace = construct_two_row(&"1,4,6,8,9/2,3,5,7".parse()?, &"1,2,3,4,7/5,6,8,9".parse()?)?;
    print!("{}", trace.render());

    println!("\ntwo columns:");
    let trace = construct_two_col(&"2,6/3,5/4/1".parse()?, &"1,2/3,4/5/6".parse()?)?;
    print!("{}", trace.render());

    println!("\nhook:");
    let trace = construct_hook(&"1,3,4/5/2".parse()?, &"1,2,5/3/4".parse()?)?;
    print!("{}", trace.render());
    Ok(())
}
